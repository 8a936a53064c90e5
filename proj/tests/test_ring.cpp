#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "prolate/errors.hpp"
#include "prolate/modint.hpp"
#include "prolate/numbers.hpp"
#include "prolate/rational.hpp"
#include "oracles.hpp"

using namespace prolate;

TEST_CASE("legendre symbol: pinned values") {
    CHECK(legendre_symbol(1, 3) == 1);
    CHECK(legendre_symbol(0, 5) == 0);
    CHECK(legendre_symbol(2, 5) == -1);  // squares mod 5 are {0, 1, 4}
    CHECK(legendre_symbol(4, 5) == 1);
    CHECK(legendre_symbol(-1, 5) == 1);
    CHECK(legendre_symbol(10, 5) == 0);
}

TEST_CASE("legendre symbol: rejects even or tiny p") {
    CHECK_THROWS_AS(legendre_symbol(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(3, -7), std::invalid_argument);
}

TEST_CASE("legendre symbol matches residue enumeration for p <= 97") {
    for (long p = 3; p <= 97; p += 2) {
        if (!is_prime(Integer(p))) continue;
        for (long a = 0; a < p; ++a) {
            CHECK(legendre_symbol(a, p) == oracle::legendre_brute(a, p));
            if (a % p != 0) CHECK(legendre_symbol(a, p) * legendre_symbol(a, p) == 1);
        }
    }
}

TEST_CASE("pochhammer: pinned values and shift property") {
    CHECK(pochhammer(frac(5, 7), 0) == 1);
    CHECK(pochhammer(frac(-1), 1) == frac(-1));
    CHECK(pochhammer(frac(1, 2), 2) == frac(3, 4));

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        Rational q = frac(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 7) + 1);
        unsigned long j = rng() % 11, k = rng() % 11;
        CHECK(pochhammer(q, j + k) == pochhammer(q, j) * pochhammer(q + Rational(static_cast<long>(j)), k));
    }
}

TEST_CASE("binomial: pinned values, out-of-range zeros, recurrence oracle") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(17, 0) == 1);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    for (int n = 0; n <= 12; ++n)
        for (int k = -1; k <= n + 1; ++k)
            CHECK(binomial(static_cast<unsigned long>(n), k) == oracle::binomial_recurrence(n, k));
}

TEST_CASE("binomial kernel identity: sum_l binom(j,l) binom(k,l) = binom(j+k, j)") {
    for (int N = 0; N <= 12; ++N)
        for (int j = 0; j <= N; ++j)
            for (int k = 0; k <= N; ++k) {
                Integer sum = 0;
                for (int l = 0; l <= N; ++l)
                    sum += binomial(static_cast<unsigned long>(j), l) *
                           binomial(static_cast<unsigned long>(k), l);
                CHECK(sum == binomial(static_cast<unsigned long>(j + k), j));
            }
}

TEST_CASE("rational_to_mod: pinned values and non-invertible denominator") {
    CHECK(rational_to_mod(frac(7, 2), 5).value() == 1);  // 2^{-1} = 3, 21 = 1 mod 5
    CHECK(rational_to_mod(frac(1), 9).value() == 1);
    CHECK_THROWS_AS(rational_to_mod(frac(1, 3), 3), NonInvertibleDenominator);
    CHECK_THROWS_AS(rational_to_mod(frac(5, 21), 49), NonInvertibleDenominator);
}

TEST_CASE("ModInt: modulus validation and mixed-modulus rejection") {
    CHECK_THROWS_AS(ModInt(1, 4), std::invalid_argument);    // 2^2
    CHECK_THROWS_AS(ModInt(1, 15), std::invalid_argument);   // 3 * 5
    CHECK_THROWS_AS(ModInt(1, 1), std::invalid_argument);
    CHECK_NOTHROW(ModInt(1, 27));
    CHECK_NOTHROW(ModInt(1, 3125));
    ModInt a(2, 5), b(3, 7);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS((void)(a == b), std::invalid_argument);
}

TEST_CASE("ModInt: ring axioms under randomized testing") {
    std::mt19937 rng(7);
    const Integer m = 343;  // 7^3
    for (int trial = 0; trial < 200; ++trial) {
        ModInt x(Integer(rng() % 343), m), y(Integer(rng() % 343), m), z(Integer(rng() % 343), m);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(x + (-x) == x.zero());
        CHECK(x * x.one() == x);
    }
}

TEST_CASE("rational_to_mod is a ring homomorphism on p-integral rationals") {
    std::mt19937 rng(53);
    const Integer m = 125;  // 5^3
    auto random_unit_rational = [&rng]() {
        long den;
        do { den = 1 + static_cast<long>(rng() % 40); } while (den % 5 == 0);
        return frac(static_cast<long>(rng() % 81) - 40, den);
    };
    for (int trial = 0; trial < 100; ++trial) {
        Rational a = random_unit_rational(), b = random_unit_rational();
        CHECK(rational_to_mod(a + b, m) == rational_to_mod(a, m) + rational_to_mod(b, m));
        CHECK(rational_to_mod(a * b, m) == rational_to_mod(a, m) * rational_to_mod(b, m));
        CHECK(rational_to_mod(-a, m) == -rational_to_mod(a, m));
    }
}

TEST_CASE("ModInt: inverse and pow") {
    ModInt a(2, 9);
    CHECK(a.inverse().value() == 5);
    CHECK(a.pow(6).value() == Integer(64 % 9));
    CHECK(a.pow(-1) == a.inverse());
    CHECK_THROWS_AS(ModInt(3, 9).inverse(), NonInvertibleDenominator);
}

TEST_CASE("pow_mod agrees with repeated multiplication") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        Integer m(2 + static_cast<long>(rng() % 97));
        Integer b(static_cast<long>(rng() % 200) - 100);
        unsigned long e = rng() % 20;
        Integer expected = 1;
        Integer bb = ((b % m) + m) % m;
        for (unsigned long i = 0; i < e; ++i) expected = expected * bb % m;
        CHECK(pow_mod(b, Integer(static_cast<long>(e)), m) == expected);
    }
    CHECK_THROWS_AS(pow_mod(2, -1, 7), std::invalid_argument);
}

TEST_CASE("prime predicates") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK(is_odd_prime(3));
    CHECK_FALSE(is_odd_prime(2));
    auto pp = odd_prime_power(2187);
    REQUIRE(pp.has_value());
    CHECK(pp->first == 3);
    CHECK(pp->second == 7);
    CHECK_FALSE(odd_prime_power(12).has_value());
    CHECK_FALSE(odd_prime_power(45).has_value());
}
