#ifndef PROLATE_DIFFOP_HPP
#define PROLATE_DIFFOP_HPP

#include <array>
#include <optional>
#include <vector>

#include "prolate/extended_function.hpp"
#include "prolate/polynomial.hpp"
#include "prolate/rational.hpp"

namespace prolate {

// sum_i c_i(z) d^i/dz^i with ExtendedFunction coefficients (denominators
// restricted to powers of z and 1-z). Leading coefficient nonzero.
class DifferentialOperator {
  public:
    explicit DifferentialOperator(std::vector<ExtendedFunction> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const ExtendedFunction& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }

    ExtendedFunction apply(const ExtendedFunction& f) const;
    ExtendedFunction apply(const RationalPoly& f) const {
        return apply(ExtendedFunction::from_poly(f));
    }

    bool operator==(const DifferentialOperator& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const DifferentialOperator& rhs) const { return !(*this == rhs); }

  private:
    std::vector<ExtendedFunction> c_;
};

// d/dz as an operator, for exact derivative checks.
DifferentialOperator derivative_operator();

// The third-order operator with polynomial coefficients
//   y |-> z^2(1-z)^2 y''' + 3z(1-z)((N-1)z - N) y''
//         + N((2N-5)z^2 + (2-5N)z + 2N+1) y'
//         + N((2N+1)z + N^2+N+1) y - mu y
// whose kernel consists of generating functions of mu-eigenvectors of the
// Jacobi matrix.
DifferentialOperator genfun_ode(int N, const Rational& mu);

// The same operator conjugated by z^{N+1} and made monic (divided by
// z^{N+3}(1-z)^2): y |-> z^{-(N+1)} L(z^{N+1} y) / (z^2 (1-z)^2).
DifferentialOperator conjugated_monic_ode(int N, const Rational& mu);

// Monic symmetric square: for L = d^2 + v1 d + v0 returns
//   d^3 + 3 v1 d^2 + (4 v0 + v1' + 2 v1^2) d + (2 v0' + 4 v0 v1),
// whose kernel is spanned by pairwise products of kernel elements of L.
DifferentialOperator symmetric_square(const DifferentialOperator& L);

// Solves the first two symmetric-square equations for v1, v0 of the
// conjugated monic operator and checks the third; returns the second-order
// factor exactly when consistent, which happens iff mu = (N^2+2N)/2.
std::optional<DifferentialOperator> symmetric_square_criterion(int N, const Rational& mu);

// conjugated_monic_ode at mu = (N^2+2N)/2, cleared of denominators by
// z^2 (1-z)^2; polynomial coefficients.
DifferentialOperator cleared_ode(int N);

// Solution basis of the cleared operator for even N, with
// P(z) = 2F1(-N/2, N/2+1; -N; z):
//   y1 = (z/(1-z))^{N+1} P(1-z)^2,  y2 = P(1-z) P(z),
//   y3 = ((1-z)/z)^{N+1} P(z)^2.
std::array<ExtendedFunction, 3> ode_solution_basis(int N);

// True iff the cleared operator annihilates all three basis elements.
bool solution_basis_check(int N);

// True iff genfun_ode(N, (N^2+2N)/2) applied to z^{N+1} y equals
// z^{N+1} times the cleared operator applied to y, on monomials y = z^j,
// j <= N+3.
bool conjugation_check(int N);

}  // namespace prolate

#endif
