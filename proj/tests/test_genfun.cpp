#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>

#include "prolate/contour.hpp"
#include "prolate/errors.hpp"
#include "prolate/genfun.hpp"
#include "prolate/hypergeometric.hpp"
#include "prolate/operators.hpp"
#include "oracles.hpp"

using namespace prolate;

namespace {

RationalVector rv(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

RationalPoly rp(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return RationalPoly(std::move(c));
}

// Coefficient of z^l in the double Cauchy sum over Pochhammer ratios; the
// independent term-by-term route to the fixed generating function.
Rational double_sum_coefficient(int N, int l) {
    Rational sum(0);
    for (int j = 0; j <= N / 2; ++j) {
        int k = l - j;
        if (k < 0 || k > N / 2) continue;
        Rational numer = pochhammer(frac(-N, 2), static_cast<unsigned long>(j)) *
                         pochhammer(frac(-N, 2), static_cast<unsigned long>(k)) *
                         pochhammer(frac(N, 2) + 1, static_cast<unsigned long>(j)) *
                         pochhammer(frac(-3 * N, 2) - 1, static_cast<unsigned long>(k));
        Rational denom = Rational(factorial(static_cast<unsigned long>(j))) *
                         Rational(factorial(static_cast<unsigned long>(k))) *
                         pochhammer(frac(-N), static_cast<unsigned long>(j)) *
                         pochhammer(frac(-N), static_cast<unsigned long>(k));
        sum += numer / denom;
    }
    return sum;
}

}  // namespace

TEST_CASE("gen_poly: reversed indexing") {
    CHECK(gen_poly(rv({-2, -1, 1})) == rp({1, -1, -2}));
    CHECK(gen_poly(rv({1})) == rp({1}));
    CHECK(gen_poly(rv({0, 0, 0, 1})) == rp({1, 0, 0, 0}));  // v_N is the constant term
    RationalVector v = rv({3, 1, -4, 1, 5});
    CHECK(gen_poly_vector(gen_poly(v), 4) == v);
}

TEST_CASE("hyp2f1_terminating: pinned polynomials") {
    CHECK(hyp2f1_terminating(HypergeometricSpec(frac(-1), frac(2), frac(-2), 1)) == rp({1, 1}));
    RationalPoly h = hyp2f1_terminating(HypergeometricSpec(frac(-2), frac(3), frac(-4), 2));
    CHECK(h.coeff(0) == 1);
    CHECK(h.coeff(1) == frac(3, 2));
    CHECK(h.coeff(2) == 1);
    // constant coefficient is always (q)_0 = 1
    CHECK(hyp2f1_terminating(HypergeometricSpec(frac(-7), frac(5, 3), frac(11, 2), 7)).coeff(0) == 1);
}

TEST_CASE("hyp2f1 coefficients match the direct Pochhammer quotient") {
    for (auto [a2, b_num, b_den, c, d] :
         {std::tuple<long, long, long, long, long>{-3, 5, 2, -7, 3},
          {-5, -9, 1, -11, 5},
          {-4, 7, 3, 9, 4}}) {
        HypergeometricSpec spec(frac(a2), frac(b_num, b_den), frac(c), d);
        RationalPoly h = hyp2f1_terminating(spec);
        for (long k = 0; k <= d; ++k) {
            Rational direct = pochhammer(spec.a, static_cast<unsigned long>(k)) *
                              pochhammer(spec.b, static_cast<unsigned long>(k)) /
                              (pochhammer(spec.c, static_cast<unsigned long>(k)) *
                               Rational(factorial(static_cast<unsigned long>(k))));
            CHECK(h.coeff(static_cast<int>(k)) == direct);
        }
    }
}

TEST_CASE("hyp2f1_terminating: pole before termination") {
    CHECK_THROWS_AS(
        hyp2f1_terminating(HypergeometricSpec(frac(-4), frac(1, 2), frac(-2), 4)),
        PoleBeforeTermination);
    CHECK_THROWS_AS(HypergeometricSpec(frac(-3), frac(1), frac(1), 2), std::invalid_argument);
}

TEST_CASE("fixed vector: pinned witnesses") {
    CHECK(pascal_fixed_vector(2) == rv({-2, -1, 1}));
    RationalVector v4 = pascal_fixed_vector(4);
    CHECK(v4 == RationalVector{frac(7, 2), frac(7, 4), frac(-3, 4), frac(-2), frac(1)});
    CHECK(pascal_fixed_vector(0) == rv({1}));
    CHECK_THROWS_AS(pascal_fixed_vector(3), std::invalid_argument);
}

TEST_CASE("fixed genfun: pinned polynomials and factor forms") {
    CHECK(pascal_fixed_genfun(2) == rp({1, -1, -2}));  // (1+z)(1-2z)
    CHECK(pascal_fixed_genfun(0) == rp({1}));
    RationalPoly f4 = pascal_fixed_genfun(4);
    CHECK(f4.coeff(0) == 1);
    CHECK(f4.coeff(1) == frac(-2));
    CHECK(f4.coeff(2) == frac(-3, 4));
    CHECK(f4.coeff(3) == frac(7, 4));
    CHECK(f4.coeff(4) == frac(7, 2));

    CHECK(hyp_factor(2) == rp({1, 1}));
    CHECK(hyp_cofactor(2) == rp({1, -2}));
    RationalPoly q4 = hyp_cofactor(4);
    CHECK(q4.coeff(1) == frac(-7, 2));
    CHECK(q4.coeff(2) == frac(7, 2));
}

TEST_CASE("fixed vector matches the exact null-space oracle") {
    for (int N = 0; N <= 12; N += 2) {
        auto expected = oracle::fixed_vector_by_elimination(N);
        REQUIRE(expected.has_value());  // kernel of T - I is one-dimensional
        CHECK(pascal_fixed_vector(N) == *expected);
    }
}

TEST_CASE("fixed vector matches the double Pochhammer sum termwise") {
    for (int N = 0; N <= 20; N += 2) {
        RationalVector v = pascal_fixed_vector(N);
        for (int l = 0; l <= N; ++l)
            CHECK(v[static_cast<size_t>(N - l)] == double_sum_coefficient(N, l));
    }
}

TEST_CASE("fixed genfun and fixed vector are two views of one object") {
    for (int N = 0; N <= 40; N += 2)
        CHECK(pascal_fixed_genfun(N) == gen_poly(pascal_fixed_vector(N)));
}

TEST_CASE("palindromy of the hypergeometric factor") {
    for (int N = 0; N <= 40; N += 2) {
        RationalPoly P = hyp_factor(N);
        for (int k = 0; k <= N / 2; ++k) CHECK(P.coeff(k) == P.coeff(N / 2 - k));
    }
}

TEST_CASE("mobius_substitute: pinned maps") {
    CHECK(mobius_substitute(rp({1, -1, -2}), MobiusMap::OneOverZ, 2) == rp({-2, -1, 1}));
    CHECK(mobius_substitute(rp({1}), MobiusMap::ZOverZMinusOne, 0) == rp({1}));
    CHECK(mobius_substitute(rp({1}), MobiusMap::OneMinusOneOverZ, 0) == rp({1}));
    CHECK(mobius_substitute(rp({1, 1}), MobiusMap::ZOverZMinusOne, 1) == rp({1, -2}));
    CHECK(mobius_substitute(rp({1, 2}), MobiusMap::OneMinusZ, 0) == rp({3, -2}));
    CHECK_THROWS_AS(mobius_substitute(rp({1, 1, 1}), MobiusMap::OneOverZ, 1),
                    NonPolynomialResult);
}

TEST_CASE("mobius_substitute validated by brute-force evaluation") {
    // (1-z)^d f(z/(z-1)) and z^d f(1-1/z) compared at sample points.
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        RationalVector c = oracle::random_int_vector(rng, 4);
        RationalPoly f{std::vector<Rational>(c.begin(), c.end())};
        int d = 3;
        RationalPoly g1 = mobius_substitute(f, MobiusMap::ZOverZMinusOne, d);
        RationalPoly g2 = mobius_substitute(f, MobiusMap::OneMinusOneOverZ, d);
        RationalPoly g3 = mobius_substitute(f, MobiusMap::OneMinusZ, d);
        for (long s : {2L, 3L, -1L, 5L, -4L}) {
            Rational z(s);
            Rational omz = Rational(1) - z;
            Rational pw(1);
            for (int i = 0; i < d; ++i) pw *= omz;
            CHECK(g1.eval(z) == pw * f.eval(z / (z - 1)));
            Rational zd(1);
            for (int i = 0; i < d; ++i) zd *= z;
            CHECK(g2.eval(z) == zd * f.eval(Rational(1) - 1 / z));
            CHECK(g3.eval(z) == f.eval(omz));
        }
    }
}

TEST_CASE("divmod recomposes exactly with remainder below divisor degree") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        RationalVector ac = oracle::random_int_vector(rng, 1 + rng() % 9);
        RationalVector bc = oracle::random_int_vector(rng, 1 + rng() % 5);
        RationalPoly a{std::vector<Rational>(ac.begin(), ac.end())};
        RationalPoly b{std::vector<Rational>(bc.begin(), bc.end())};
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("pascal_genfun_image: pinned values") {
    CHECK(pascal_genfun_image(0, rv({7})) == rp({7}));
    CHECK(pascal_genfun_image(2, rv({-2, -1, 1})) == rp({1, -1, -2}));
    CHECK(pascal_genfun_image(1, rv({1, 0})) == gen_poly(pascal_apply(1, rv({1, 0}))));
}

TEST_CASE("pascal_genfun_image equals gen_poly of pascal_apply") {
    std::mt19937 rng(123);
    for (int N = 0; N <= 20; ++N)
        for (int trial = 0; trial < 5; ++trial) {
            RationalVector v = oracle::random_int_vector(rng, static_cast<size_t>(N) + 1, -99, 99);
            CHECK(pascal_genfun_image(N, v) == gen_poly(pascal_apply(N, v)));
        }
}

TEST_CASE("adjoint genfun identity on random vectors") {
    std::mt19937 rng(5);
    for (int N : {0, 2, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            RationalVector v = oracle::random_int_vector(rng, static_cast<size_t>(N) + 1);
            CHECK(adjoint_genfun_identity_check(N, v));
        }
    }
}

TEST_CASE("eigen relation for the fixed vectors") {
    CHECK(eigen_relation_check(2, rv({-2, -1, 1}), Rational(1)));
    CHECK(eigen_relation_check(0, rv({1}), Rational(1)));
    CHECK(eigen_relation_check(4, pascal_fixed_vector(4), Rational(1)));
    CHECK_THROWS_AS(eigen_relation_check(2, rv({1, 0, 0}), Rational(1)), NotAnEigenvector);
}

TEST_CASE("connection identity between the two factors") {
    CHECK(connection_identity_check(0));  // 1 = (1-z) + z
    CHECK(connection_identity_check(2));  // 1-2z = (1+z)(1-z)^3 - (2-z)z^3
    CHECK(connection_identity_check(8));
    for (int N = 0; N <= 40; N += 2) CHECK(connection_identity_check(N));
}

TEST_CASE("contour line integral matches lambda f on the fixed vector, N = 2") {
    RationalVector v = rv({-2, -1, 1});
    auto at = [&](double z) { return contour_line_integral(2, v, {z, 0.0}); };
    CHECK(std::abs(at(0.0).value - std::complex<double>(1.0)) < 1e-8);
    CHECK(std::abs(at(1.0).value - std::complex<double>(-2.0)) < 1e-8);
    CHECK(std::abs(at(0.5).value) < 1e-8);  // f(1/2) = 0
}

TEST_CASE("quadrature error estimates bound the observed error") {
    for (int N : {2, 4}) {
        RationalVector v = pascal_fixed_vector(N);
        RationalPoly f = gen_poly(v);
        for (double z : {0.0, 0.25, 1.0}) {
            auto r = contour_line_integral(N, v, {z, 0.0});
            double actual = std::abs(r.value - std::complex<double>(
                                                   f.eval(frac(static_cast<long>(4 * z), 4)).get_d()));
            CHECK(r.error_estimate > 0.0);
            CHECK(actual <= r.error_estimate);
            CHECK(r.truncation > 0.0);
            CHECK(r.step > 0.0);
        }
    }
}

TEST_CASE("contour line integral reports a contour singularity at z = 2") {
    CHECK_THROWS_AS(contour_line_integral(2, rv({-2, -1, 1}), {2.0, 0.0}),
                    ContourSingularity);
}

TEST_CASE("continued integral value equals lambda f everywhere, N in {2, 4}") {
    for (int N : {2, 4}) {
        RationalVector v = pascal_fixed_vector(N);
        RationalPoly f = gen_poly(v);
        for (double z : {0.0, 0.5, 1.0, 0.25, -0.25, 2.0, -2.0, 3.0, -3.0, 5.0}) {
            auto r = integral_operator_value(N, v, {z, 0.0});
            double expected = f.eval(frac(static_cast<long>(z * 4), 4)).get_d();
            CAPTURE(N);
            CAPTURE(z);
            CHECK(std::abs(r.value - std::complex<double>(expected)) < 1e-8);
        }
    }
}

TEST_CASE("continued integral value holds off the real axis") {
    // One sample per continuation branch: pole left of the line, pole near
    // the line (shifted contour), and pole right of the line (residue term).
    RationalVector v = pascal_fixed_vector(2);
    auto horner = [&](std::complex<double> z) {
        std::complex<double> acc(0.0);
        RationalPoly f = gen_poly(v);
        for (int i = f.bound(); i >= 0; --i) acc = acc * z + f.coeff(i).get_d();
        return acc;
    };
    for (std::complex<double> z : {std::complex<double>(0.3, 0.4),
                                   std::complex<double>(2.0, 1.0),
                                   std::complex<double>(3.0, -2.0)}) {
        auto r = integral_operator_value(2, v, z);
        CAPTURE(z.real());
        CAPTURE(z.imag());
        CHECK(std::abs(r.value - horner(z)) < 1e-8);
    }
}
