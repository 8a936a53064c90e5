#ifndef PROLATE_GENFUN_HPP
#define PROLATE_GENFUN_HPP

#include "prolate/polynomial.hpp"
#include "prolate/rational.hpp"

namespace prolate {

// Generating function f(v; z) = sum_k v_k z^{N-k} of a vector of length
// N+1: reversed indexing, coefficient of z^{N-k} is v_k, degree bound N.
RationalPoly gen_poly(const RationalVector& v);

// Inverse of gen_poly for a polynomial of degree <= N.
RationalVector gen_poly_vector(const RationalPoly& f, int N);

// Scaled Moebius substitutions that keep polynomials polynomial:
//   OneMinusZ:        f(1-z)                     (no scale)
//   ZOverZMinusOne:   (1-z)^d f(z/(z-1))
//   OneMinusOneOverZ: z^d f(1-1/z)
//   OneOverZ:         z^d f(1/z)                 (coefficient reversal)
// The scaled maps require d >= deg f; otherwise NonPolynomialResult.
enum class MobiusMap { OneMinusZ, ZOverZMinusOne, OneMinusOneOverZ, OneOverZ };

RationalPoly mobius_substitute(const RationalPoly& f, MobiusMap map, int d);

// Polynomial part of z^{2N+1} (z-1)^{-(N+1)} f(v; 1-1/z), extracted by exact
// Euclidean division. Equals gen_poly(pascal_apply(N, v)).
RationalPoly pascal_genfun_image(int N, const RationalVector& v);

// f(B* v; z) = (z-1)^N f(v; z/(z-1)), with (z-1)^N = (-1)^N (1-z)^N.
bool adjoint_genfun_identity_check(int N, const RationalVector& v);

// lambda f(v; z) = (z-1)^N f(B v; z/(z-1)) for an eigenvector v of the
// Pascal matrix. Throws NotAnEigenvector if pascal_apply(N, v) != lambda v.
bool eigen_relation_check(int N, const RationalVector& v, const Rational& lambda);

// The two terminating 2F1 factors of the fixed generating function:
// hyp_factor(N)   = 2F1(-N/2, N/2+1; -N; z)     (palindromic, degree N/2)
// hyp_cofactor(N) = 2F1(-N/2, -3N/2-1; -N; z)   (Pfaff transform of the
//                   factor evaluated at z/(z-1), scaled by (1-z)^{N/2})
RationalPoly hyp_factor(int N);
RationalPoly hyp_cofactor(int N);

// Connection identity between the two factors:
// hyp_cofactor(z) = hyp_factor(z) (1-z)^{N+1} + (-1)^{N/2} hyp_factor(1-z) z^{N+1}.
bool connection_identity_check(int N);

// The unique fixed vector of the Pascal matrix T_N for even N, normalized
// with v_N = 1: T_N v = v. Its generating function is
// hyp_factor(N) * hyp_cofactor(N). Rejects odd N.
RationalVector pascal_fixed_vector(int N);
RationalPoly pascal_fixed_genfun(int N);

// Sign s with binomial_apply(N, v) = s v on the fixed vector (B^2 = I forces
// s = +-1); reported empirically per N.
int binomial_sign_on_fixed_vector(int N);

}  // namespace prolate

#endif
