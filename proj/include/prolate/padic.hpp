#ifndef PROLATE_PADIC_HPP
#define PROLATE_PADIC_HPP

#include <vector>

#include "prolate/polynomial.hpp"
#include "prolate/rational.hpp"

namespace prolate {

// Power series truncation with explicit bookkeeping of how many leading
// coefficients are valid. Derivatives lose an order, sums and products take
// the minimum, and multiplication by a polynomial divisible by z^k gains k.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(c_.size()); }
    const Rational& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncatedSeries derivative() const;
    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const Rational& s) const;
    TruncatedSeries mul_poly(const RationalPoly& p) const;

    bool valid_coefficients_vanish() const;

  private:
    std::vector<Rational> c_;
};

// First K coefficients of the period series 2F1(1/2, 1/2; 1; z):
// c_k = ((1/2)_k / k!)^2.
TruncatedSeries period_series(int K);

// Residual of z(1-z) f'' + (1-2z) f' - (1/4) f on a truncated series.
TruncatedSeries hypergeometric_ode_residual(const TruncatedSeries& f);

// Residual of z^2(1-z)^2 f''' + 3z(1-z)(1-2z) f'' + (1-7z(1-z)) f'
// - (1/2 - z) f, the symmetric square of the equation above.
TruncatedSeries symmetric_square_ode_residual(const TruncatedSeries& f);

// The period series solves its equation to every computable order (K >= 4).
bool hypergeometric_ode_check(int K);

// The squared period series solves the symmetric-square equation (K >= 5).
bool symmetric_square_ode_check(int K);

// The fixed generating function at order p^n - 1, which converges
// p-adically to the square of the period series on the open unit disk.
RationalPoly period_square_approximant(long p, int n);

struct PadicCongruenceReport {
    bool pass = true;
    long witness = 0;              // failing sample t when !pass
    int coefficient_agreement = 0; // observed coefficient-wise match mod p^n
};

// Value-wise congruence at z = p t: approximant(pt) = (sum_{k<n} c_k (pt)^k)^2
// mod p^n for each sample t. The series tail vanishes mod p^n because the
// z-valuation of the k-th term is at least k and the c_k denominators are
// powers of 2. Coefficient-wise agreement is reported but not asserted.
PadicCongruenceReport padic_congruence_report(long p, int n, const std::vector<long>& samples);
bool padic_congruence_check(long p, int n, const std::vector<long>& samples);

}  // namespace prolate

#endif
