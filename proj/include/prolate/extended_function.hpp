#ifndef PROLATE_EXTENDED_FUNCTION_HPP
#define PROLATE_EXTENDED_FUNCTION_HPP

#include <string>

#include "prolate/polynomial.hpp"
#include "prolate/rational.hpp"

namespace prolate {

// q(z) * z^a * (1-z)^b with integer exponents a, b (possibly negative) and
// q a rational polynomial. Stored exponent-normalized: q = 0 with a = b = 0,
// or q(0) != 0 and q(1) != 0 (all z and 1-z content moved into a, b), which
// makes equality structural.
class ExtendedFunction {
  public:
    ExtendedFunction();  // zero
    ExtendedFunction(RationalPoly q, long a, long b);

    static ExtendedFunction from_poly(const RationalPoly& q) {
        return ExtendedFunction(q, 0, 0);
    }
    static ExtendedFunction constant(const Rational& c) {
        return ExtendedFunction(RationalPoly::constant(c), 0, 0);
    }
    // c * z^a * (1-z)^b
    static ExtendedFunction monomial(const Rational& c, long a, long b) {
        return ExtendedFunction(RationalPoly::constant(c), a, b);
    }

    bool is_zero() const { return q_.is_zero(); }
    const RationalPoly& numerator() const { return q_; }
    long z_exponent() const { return a_; }
    long one_minus_z_exponent() const { return b_; }

    ExtendedFunction operator+(const ExtendedFunction& rhs) const;
    ExtendedFunction operator-(const ExtendedFunction& rhs) const;
    ExtendedFunction operator*(const ExtendedFunction& rhs) const;
    ExtendedFunction operator*(const Rational& s) const;
    ExtendedFunction operator-() const;

    // d/dz [q z^a (1-z)^b]
    //   = [q' z (1-z) + a q (1-z) - b q z] z^{a-1} (1-z)^{b-1}
    ExtendedFunction derivative() const;

    bool operator==(const ExtendedFunction& rhs) const;
    bool operator!=(const ExtendedFunction& rhs) const { return !(*this == rhs); }

    // Exact evaluation; x must avoid 0 and 1 when the exponents are negative.
    Rational eval(const Rational& x) const;

    std::string to_string() const;

  private:
    void normalize();

    RationalPoly q_;
    long a_ = 0;
    long b_ = 0;
};

}  // namespace prolate

#endif
