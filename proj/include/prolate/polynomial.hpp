#ifndef PROLATE_POLYNOMIAL_HPP
#define PROLATE_POLYNOMIAL_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prolate/modint.hpp"
#include "prolate/rational.hpp"

namespace prolate {

// Additive/multiplicative identities in the scalar ring of a witness
// element. ModInt carries its modulus, so identities must be derived from an
// existing value rather than default-constructed.
inline Rational ring_zero(const Rational&) { return Rational(0); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline Rational ring_from_int(const Rational&, long k) { return Rational(k); }
inline ModInt ring_zero(const ModInt& x) { return x.zero(); }
inline ModInt ring_one(const ModInt& x) { return x.one(); }
inline ModInt ring_from_int(const ModInt& x, long k) { return ModInt(Integer(k), x.modulus()); }

// Dense polynomial over an exact scalar ring, index = power of z. Trailing
// zero coefficients are permitted; size() - 1 is the declared degree bound.
// Never empty.
template <typename T>
class DensePoly {
  public:
    explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("DensePoly: empty coefficient list");
    }

    static DensePoly constant(const T& value) { return DensePoly(std::vector<T>{value}); }
    static DensePoly zero(const T& witness) { return constant(ring_zero(witness)); }

    int bound() const { return static_cast<int>(c_.size()) - 1; }

    // Highest power with a nonzero coefficient; -1 for the zero polynomial.
    int degree() const {
        for (int i = bound(); i >= 0; --i)
            if (!(c_[i] == ring_zero(c_[0]))) return i;
        return -1;
    }

    bool is_zero() const { return degree() < 0; }

    const std::vector<T>& coeffs() const { return c_; }

    // Coefficient of z^i, zero outside the stored range.
    T coeff(int i) const {
        if (i < 0 || i > bound()) return ring_zero(c_[0]);
        return c_[i];
    }

    T eval(const T& x) const {
        T acc = c_.back();
        for (int i = bound() - 1; i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    DensePoly derivative() const {
        if (bound() == 0) return zero(c_[0]);
        std::vector<T> d;
        d.reserve(c_.size() - 1);
        for (int i = 1; i <= bound(); ++i) d.push_back(ring_from_int(c_[0], i) * c_[i]);
        return DensePoly(std::move(d));
    }

    // Multiplication by z^k, k >= 0.
    DensePoly shifted(int k) const {
        if (k < 0) throw std::invalid_argument("DensePoly::shifted: negative shift");
        std::vector<T> r(c_.size() + static_cast<size_t>(k), ring_zero(c_[0]));
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return DensePoly(std::move(r));
    }

    DensePoly trimmed() const {
        int d = degree();
        if (d < 0) return zero(c_[0]);
        return DensePoly(std::vector<T>(c_.begin(), c_.begin() + d + 1));
    }

    // Pads with zeros up to the given bound. Throws if that would drop a
    // nonzero coefficient.
    DensePoly resized(int new_bound) const {
        if (new_bound < degree())
            throw std::invalid_argument("DensePoly::resized: would truncate");
        std::vector<T> r(c_.begin(), c_.begin() + std::min(bound(), new_bound) + 1);
        r.resize(static_cast<size_t>(new_bound) + 1, ring_zero(c_[0]));
        return DensePoly(std::move(r));
    }

    DensePoly operator+(const DensePoly& rhs) const {
        const T z = ring_zero(c_[0]);
        std::vector<T> r(std::max(c_.size(), rhs.c_.size()), z);
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
        return DensePoly(std::move(r));
    }

    DensePoly operator-(const DensePoly& rhs) const { return *this + (-rhs); }

    DensePoly operator-() const {
        std::vector<T> r = c_;
        for (auto& x : r) x = -x;
        return DensePoly(std::move(r));
    }

    DensePoly operator*(const DensePoly& rhs) const {
        const T z = ring_zero(c_[0]);
        std::vector<T> r(c_.size() + rhs.c_.size() - 1, z);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == z) continue;
            for (size_t j = 0; j < rhs.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * rhs.c_[j];
        }
        return DensePoly(std::move(r));
    }

    DensePoly operator*(const T& s) const {
        std::vector<T> r = c_;
        for (auto& x : r) x = x * s;
        return DensePoly(std::move(r));
    }

    // Equality up to trailing zeros.
    bool operator==(const DensePoly& rhs) const {
        int d = std::max(bound(), rhs.bound());
        for (int i = 0; i <= d; ++i)
            if (!(coeff(i) == rhs.coeff(i))) return false;
        return true;
    }
    bool operator!=(const DensePoly& rhs) const { return !(*this == rhs); }

  private:
    std::vector<T> c_;
};

using RationalPoly = DensePoly<Rational>;
using ModPoly = DensePoly<ModInt>;

// Quotient and remainder over the rationals; divisor must be nonzero.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);

template <typename T>
DensePoly<T> poly_pow(const DensePoly<T>& base, unsigned e) {
    DensePoly<T> result = DensePoly<T>::constant(ring_one(base.coeffs()[0]));
    for (unsigned i = 0; i < e; ++i) result = result * base;
    return result;
}

// f(g(z)) by Horner over polynomials.
template <typename T>
DensePoly<T> compose(const DensePoly<T>& f, const DensePoly<T>& g) {
    DensePoly<T> acc = DensePoly<T>::constant(f.coeff(f.bound()));
    for (int i = f.bound() - 1; i >= 0; --i)
        acc = acc * g + DensePoly<T>::constant(f.coeff(i));
    return acc;
}

inline ModPoly reduce_mod(const RationalPoly& f, const Integer& modulus) {
    std::vector<ModInt> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) c.push_back(rational_to_mod(q, modulus));
    return ModPoly(std::move(c));
}

std::string poly_to_string(const RationalPoly& f, const std::string& var = "z");

}  // namespace prolate

#endif
