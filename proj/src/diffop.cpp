#include "prolate/diffop.hpp"

#include <stdexcept>

#include "prolate/genfun.hpp"
#include "prolate/numbers.hpp"

namespace prolate {

DifferentialOperator::DifferentialOperator(std::vector<ExtendedFunction> coeffs)
    : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("DifferentialOperator: no coefficients");
    if (c_.back().is_zero())
        throw std::invalid_argument("DifferentialOperator: zero leading coefficient");
}

ExtendedFunction DifferentialOperator::apply(const ExtendedFunction& f) const {
    ExtendedFunction result;
    ExtendedFunction d = f;
    for (size_t i = 0; i < c_.size(); ++i) {
        result = result + c_[i] * d;
        if (i + 1 < c_.size()) d = d.derivative();
    }
    return result;
}

DifferentialOperator derivative_operator() {
    return DifferentialOperator(
        {ExtendedFunction(), ExtendedFunction::constant(Rational(1))});
}

namespace {

RationalPoly poly(std::vector<Rational> coeffs) { return RationalPoly(std::move(coeffs)); }

Rational mu_star(int N) { return frac(Integer(N) * N + 2 * N, 2); }

}  // namespace

DifferentialOperator genfun_ode(int N, const Rational& mu) {
    if (N < 0) throw std::invalid_argument("genfun_ode: negative order");
    const Rational n(N);
    // z^2 (1-z)^2
    RationalPoly p3 = poly({Rational(0), Rational(0), Rational(1), Rational(-2), Rational(1)});
    // 3 z (1-z) ((N-1) z - N)
    RationalPoly p2 = poly({Rational(0), Rational(1), Rational(-1)}) *
                      poly({-n, n - 1}) * Rational(3);
    // N ((2N-5) z^2 + (2-5N) z + 2N+1)
    RationalPoly p1 = poly({2 * n + 1, 2 - 5 * n, 2 * n - 5}) * n;
    // N ((2N+1) z + N^2 + N + 1) - mu
    RationalPoly p0 = poly({n * n + n + 1, 2 * n + 1}) * n - RationalPoly::constant(mu);
    std::vector<ExtendedFunction> c;
    c.push_back(ExtendedFunction::from_poly(p0));
    c.push_back(ExtendedFunction::from_poly(p1));
    c.push_back(ExtendedFunction::from_poly(p2));
    c.push_back(ExtendedFunction::from_poly(p3));
    return DifferentialOperator(std::move(c));
}

DifferentialOperator conjugated_monic_ode(int N, const Rational& mu) {
    DifferentialOperator L = genfun_ode(N, mu);
    // Compose with multiplication by z^{N+1} on the right:
    //   M_j = sum_{i >= j} binom(i, j) P_i (d/dz)^{i-j} z^{N+1},
    // then divide by z^{N+3} (1-z)^2 to make the result monic.
    std::vector<ExtendedFunction> m(4, ExtendedFunction());
    for (int j = 0; j <= 3; ++j) {
        for (int i = j; i <= 3; ++i) {
            int r = i - j;  // derivative order applied to z^{N+1}
            Rational fall(1);
            for (int s = 0; s < r; ++s) fall *= Rational(N + 1 - s);
            ExtendedFunction term =
                L.coeff(i) * ExtendedFunction::monomial(
                                 Rational(binomial(i, j)) * fall, N + 1 - r, 0);
            m[static_cast<size_t>(j)] = m[static_cast<size_t>(j)] + term;
        }
        m[static_cast<size_t>(j)] =
            m[static_cast<size_t>(j)] * ExtendedFunction::monomial(Rational(1), -(N + 3), -2);
    }
    return DifferentialOperator(std::move(m));
}

DifferentialOperator symmetric_square(const DifferentialOperator& L) {
    if (L.order() != 2 || L.coeff(2) != ExtendedFunction::constant(Rational(1)))
        throw std::invalid_argument("symmetric_square: operator must be monic of order 2");
    const ExtendedFunction& v1 = L.coeff(1);
    const ExtendedFunction& v0 = L.coeff(0);
    ExtendedFunction u2 = v1 * Rational(3);
    ExtendedFunction u1 = v0 * Rational(4) + v1.derivative() + v1 * v1 * Rational(2);
    ExtendedFunction u0 = v0.derivative() * Rational(2) + v0 * v1 * Rational(4);
    return DifferentialOperator(
        {u0, u1, u2, ExtendedFunction::constant(Rational(1))});
}

std::optional<DifferentialOperator> symmetric_square_criterion(int N, const Rational& mu) {
    DifferentialOperator S = conjugated_monic_ode(N, mu);
    ExtendedFunction v1 = S.coeff(2) * frac(1, 3);
    ExtendedFunction v0 =
        (S.coeff(1) - v1.derivative() - v1 * v1 * Rational(2)) * frac(1, 4);
    ExtendedFunction third = v0.derivative() * Rational(2) + v0 * v1 * Rational(4);
    if (third != S.coeff(0)) return std::nullopt;
    return DifferentialOperator({v0, v1, ExtendedFunction::constant(Rational(1))});
}

DifferentialOperator cleared_ode(int N) {
    DifferentialOperator S = conjugated_monic_ode(N, mu_star(N));
    ExtendedFunction clear = ExtendedFunction::monomial(Rational(1), 2, 2);
    std::vector<ExtendedFunction> c;
    for (int i = 0; i <= 3; ++i) c.push_back(S.coeff(i) * clear);
    return DifferentialOperator(std::move(c));
}

std::array<ExtendedFunction, 3> ode_solution_basis(int N) {
    RationalPoly P = hyp_factor(N);
    RationalPoly P_at_one_minus = mobius_substitute(P, MobiusMap::OneMinusZ, 0);
    ExtendedFunction y1(P_at_one_minus * P_at_one_minus, N + 1, -(N + 1));
    ExtendedFunction y2(P_at_one_minus * P, 0, 0);
    ExtendedFunction y3(P * P, -(N + 1), N + 1);
    return {y1, y2, y3};
}

bool solution_basis_check(int N) {
    DifferentialOperator op = cleared_ode(N);
    for (const ExtendedFunction& y : ode_solution_basis(N))
        if (!op.apply(y).is_zero()) return false;
    return true;
}

bool conjugation_check(int N) {
    DifferentialOperator L = genfun_ode(N, mu_star(N));
    DifferentialOperator C = cleared_ode(N);
    const ExtendedFunction z_pow = ExtendedFunction::monomial(Rational(1), N + 1, 0);
    for (int j = 0; j <= N + 3; ++j) {
        ExtendedFunction y = ExtendedFunction::monomial(Rational(1), j, 0);
        ExtendedFunction lhs = L.apply(z_pow * y);
        ExtendedFunction rhs = z_pow * C.apply(y);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace prolate
