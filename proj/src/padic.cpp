#include "prolate/padic.hpp"

#include <stdexcept>

#include "prolate/genfun.hpp"
#include "prolate/modint.hpp"
#include "prolate/numbers.hpp"

namespace prolate {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncatedSeries: zero valid order");
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() < 2) throw std::invalid_argument("TruncatedSeries: order too small to differentiate");
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return TruncatedSeries(std::move(d));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    size_t n = std::min(c_.size(), rhs.c_.size());
    std::vector<Rational> r(n);
    for (size_t k = 0; k < n; ++k) r[k] = c_[k] + rhs.c_[k];
    return TruncatedSeries(std::move(r));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    return *this + rhs * Rational(-1);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    size_t n = std::min(c_.size(), rhs.c_.size());
    std::vector<Rational> r(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n; ++j) r[i + j] += c_[i] * rhs.c_[j];
    return TruncatedSeries(std::move(r));
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= s;
    return TruncatedSeries(std::move(r));
}

TruncatedSeries TruncatedSeries::mul_poly(const RationalPoly& p) const {
    if (p.is_zero()) throw std::invalid_argument("TruncatedSeries::mul_poly: zero polynomial");
    int low = 0;
    while (p.coeff(low) == 0) ++low;
    // z^low content extends the valid range by low.
    size_t n = c_.size() + static_cast<size_t>(low);
    std::vector<Rational> r(n, Rational(0));
    for (int i = low; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        for (size_t j = 0; j < c_.size() && static_cast<size_t>(i) + j < n; ++j)
            r[static_cast<size_t>(i) + j] += p.coeff(i) * c_[j];
    }
    return TruncatedSeries(std::move(r));
}

bool TruncatedSeries::valid_coefficients_vanish() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

TruncatedSeries period_series(int K) {
    if (K < 1) throw std::invalid_argument("period_series: K >= 1 required");
    std::vector<Rational> c(static_cast<size_t>(K));
    Rational ratio(1);  // (1/2)_k / k!
    c[0] = 1;
    for (int k = 1; k < K; ++k) {
        ratio *= frac(2 * k - 1, 2 * k);
        c[static_cast<size_t>(k)] = ratio * ratio;
    }
    return TruncatedSeries(std::move(c));
}

namespace {

RationalPoly poly(std::vector<Rational> c) { return RationalPoly(std::move(c)); }

}  // namespace

TruncatedSeries hypergeometric_ode_residual(const TruncatedSeries& f) {
    TruncatedSeries f1 = f.derivative();
    TruncatedSeries f2 = f1.derivative();
    return f2.mul_poly(poly({Rational(0), Rational(1), Rational(-1)})) +
           f1.mul_poly(poly({Rational(1), Rational(-2)})) +
           f * frac(-1, 4);
}

TruncatedSeries symmetric_square_ode_residual(const TruncatedSeries& f) {
    TruncatedSeries f1 = f.derivative();
    TruncatedSeries f2 = f1.derivative();
    TruncatedSeries f3 = f2.derivative();
    // z^2(1-z)^2, 3z(1-z)(1-2z), 1-7z(1-z), -(1/2 - z)
    return f3.mul_poly(poly({Rational(0), Rational(0), Rational(1), Rational(-2), Rational(1)})) +
           f2.mul_poly(poly({Rational(0), Rational(3), Rational(-9), Rational(6)})) +
           f1.mul_poly(poly({Rational(1), Rational(-7), Rational(7)})) +
           f.mul_poly(poly({frac(-1, 2), Rational(1)}));
}

bool hypergeometric_ode_check(int K) {
    if (K < 4) throw std::invalid_argument("hypergeometric_ode_check: K >= 4 required");
    return hypergeometric_ode_residual(period_series(K)).valid_coefficients_vanish();
}

bool symmetric_square_ode_check(int K) {
    if (K < 5) throw std::invalid_argument("symmetric_square_ode_check: K >= 5 required");
    TruncatedSeries F = period_series(K);
    return symmetric_square_ode_residual(F * F).valid_coefficients_vanish();
}

RationalPoly period_square_approximant(long p, int n) {
    if (!is_odd_prime(Integer(p)))
        throw std::invalid_argument("period_square_approximant: p must be an odd prime");
    if (n < 1) throw std::invalid_argument("period_square_approximant: n >= 1 required");
    Integer pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    if (pn > 4000)
        throw std::invalid_argument("period_square_approximant: p^n exceeds desk scale");
    return pascal_fixed_genfun(static_cast<int>(pn.get_si()) - 1);
}

PadicCongruenceReport padic_congruence_report(long p, int n, const std::vector<long>& samples) {
    RationalPoly U = period_square_approximant(p, n);
    Integer modulus = 1;
    for (int i = 0; i < n; ++i) modulus *= p;

    ModPoly U_mod = reduce_mod(U, modulus);
    PadicCongruenceReport report;
    for (long t : samples) {
        ModInt z(Integer(p) * t, modulus);
        ModInt lhs = U_mod.eval(z);
        // Truncation index n: the series tail at z = pt carries valuation >= n.
        ModInt partial = z.zero();
        ModInt zk = z.one();
        Rational ratio(1);
        for (int k = 0; k < n; ++k) {
            if (k > 0) {
                ratio *= frac(2 * k - 1, 2 * k);
                zk = zk * z;
            }
            partial += rational_to_mod(ratio * ratio, modulus) * zk;
        }
        if (lhs != partial * partial) {
            report.pass = false;
            report.witness = t;
            break;
        }
    }

    // Observed coefficient-wise agreement with the squared period series
    // (informational; the congruence above is the asserted statement).
    TruncatedSeries F = period_series(U.bound() + 1);
    TruncatedSeries F2 = F * F;
    int agree = 0;
    for (int k = 0; k <= U.bound(); ++k) {
        const Rational& cu = U.coeff(k);
        const Rational& cf = F2.coeff(k);
        if (cu.get_den() % p == 0 || cf.get_den() % p == 0) break;
        if (rational_to_mod(cu, modulus) != rational_to_mod(cf, modulus)) break;
        ++agree;
    }
    report.coefficient_agreement = agree;
    return report;
}

bool padic_congruence_check(long p, int n, const std::vector<long>& samples) {
    return padic_congruence_report(p, n, samples).pass;
}

}  // namespace prolate
