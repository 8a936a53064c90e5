#ifndef PROLATE_RATIONAL_HPP
#define PROLATE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace prolate {

// Exact scalars. Rational is kept in canonical form: positive denominator,
// gcd(|num|, den) = 1. GMP maintains this for all arithmetic results; direct
// construction goes through frac() below, which canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

inline Rational frac(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("frac: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational frac(long num, long den = 1) {
    return frac(Integer(num), Integer(den));
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

// Serialized as "num/den" ("-2", "7/2"); never a float.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace prolate

#endif
