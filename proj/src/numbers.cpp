#include "prolate/numbers.hpp"

#include <stdexcept>

namespace prolate {

Integer pow_mod(Integer base, Integer exp, const Integer& m) {
    if (m < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
    if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
    Integer result = 1;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = (result * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return result;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (Integer d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool is_odd_prime(const Integer& n) { return n > 2 && is_prime(n); }

std::optional<std::pair<Integer, int>> odd_prime_power(const Integer& m) {
    if (m < 3 || mpz_even_p(m.get_mpz_t())) return std::nullopt;
    Integer p = 3;
    while (p * p <= m && m % p != 0) p += 2;
    if (p * p > m) p = m;  // m itself prime
    Integer rest = m;
    int n = 0;
    while (rest % p == 0) {
        rest /= p;
        ++n;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, n);
}

int legendre_symbol(const Integer& a, const Integer& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::invalid_argument("legendre_symbol: p must be an odd prime >= 3");
    Integer r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    Integer e = pow_mod(r, (p - 1) / 2, p);
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw std::invalid_argument("legendre_symbol: p is not prime");
}

Integer binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
    return result;
}

Integer factorial(unsigned long k) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), k);
    return result;
}

Rational pochhammer(const Rational& q, unsigned long k) {
    Rational result(1);
    Rational term = q;
    for (unsigned long i = 0; i < k; ++i) {
        result *= term;
        term += 1;
    }
    return result;
}

}  // namespace prolate
