#ifndef PROLATE_MODINT_HPP
#define PROLATE_MODINT_HPP

#include "prolate/rational.hpp"

namespace prolate {

// Residue in Z/p^n for an odd prime p, n >= 1. Values are immutable and
// stored in [0, m). Operations between residues with different moduli are a
// contract violation and throw.
class ModInt {
  public:
    ModInt(const Integer& value, const Integer& modulus);

    const Integer& value() const { return value_; }
    const Integer& modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    ModInt zero() const { return ModInt(raw_tag{}, 0, modulus_); }
    ModInt one() const { return ModInt(raw_tag{}, 1, modulus_); }

    ModInt operator+(const ModInt& rhs) const;
    ModInt operator-(const ModInt& rhs) const;
    ModInt operator*(const ModInt& rhs) const;
    ModInt operator-() const;
    ModInt& operator+=(const ModInt& rhs) { return *this = *this + rhs; }
    ModInt& operator-=(const ModInt& rhs) { return *this = *this - rhs; }
    ModInt& operator*=(const ModInt& rhs) { return *this = *this * rhs; }

    ModInt inverse() const;  // throws NonInvertibleDenominator if not a unit
    ModInt pow(const Integer& e) const;

    bool operator==(const ModInt& rhs) const;
    bool operator!=(const ModInt& rhs) const { return !(*this == rhs); }

  private:
    struct raw_tag {};
    ModInt(raw_tag, Integer value, Integer modulus)
        : value_(std::move(value)), modulus_(std::move(modulus)) {}
    void check_same_modulus(const ModInt& rhs) const;

    Integer value_;
    Integer modulus_;
};

// numerator * denominator^{-1} in Z/m; throws NonInvertibleDenominator when
// the denominator shares a factor with m.
ModInt rational_to_mod(const Rational& x, const Integer& modulus);

}  // namespace prolate

#endif
