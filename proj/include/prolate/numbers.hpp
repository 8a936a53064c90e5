#ifndef PROLATE_NUMBERS_HPP
#define PROLATE_NUMBERS_HPP

#include <optional>
#include <utility>

#include "prolate/rational.hpp"

namespace prolate {

// Square-and-multiply b^e mod m, e >= 0, m >= 2.
Integer pow_mod(Integer base, Integer exp, const Integer& m);

// Trial division; adequate at the scales this library sweeps (p up to ~1e5).
bool is_prime(const Integer& n);
bool is_odd_prime(const Integer& n);

// Decomposes m = p^n for an odd prime p, n >= 1; nullopt otherwise.
std::optional<std::pair<Integer, int>> odd_prime_power(const Integer& m);

// Legendre symbol (a/p) in {-1, 0, 1} via Euler's criterion. Requires p an
// odd prime >= 3 (rejects even or < 3; primality itself is the caller's
// contract and is diagnosed only if the criterion returns garbage).
int legendre_symbol(const Integer& a, const Integer& p);

// binom(n, k) with the usual convention: 0 for k < 0 or k > n.
Integer binomial(unsigned long n, long k);

Integer factorial(unsigned long k);

// Rising factorial q(q+1)...(q+k-1); 1 for k = 0.
Rational pochhammer(const Rational& q, unsigned long k);

}  // namespace prolate

#endif
