#ifndef PROLATE_OPERATORS_HPP
#define PROLATE_OPERATORS_HPP

#include <string>

#include "prolate/rational.hpp"

namespace prolate {

// Matrix-free applications of the (N+1)x(N+1) operators acting on exact
// rational vectors indexed 0..N:
//
//   pascal:            (T v)_j = sum_k binom(j+k, j) v_k
//   jacobi:            tridiagonal with off-diagonal a(n) = (N+1)^2 n - n^3
//                      and diagonal b(n) = 2n^3 + 3n^2 + 2n - (N+1)^2 n
//   binomial:          (B v)_j = sum_k (-1)^k binom(j, k) v_k
//   binomial adjoint:  (B* v)_j = sum_k (-1)^j binom(k, j) v_k
//
// All throw std::invalid_argument on |v| != N+1.

RationalVector pascal_apply(int N, const RationalVector& v);
RationalVector jacobi_apply(int N, const RationalVector& v);
RationalVector binomial_apply(int N, const RationalVector& v);
RationalVector binomial_adjoint_apply(int N, const RationalVector& v);

Integer jacobi_off_diagonal(int N, long n);  // a(n)
Integer jacobi_diagonal(int N, long n);      // b(n)

enum class OperatorKind { Pascal, Jacobi, BinomialForward, BinomialAdjoint };

struct OperatorSpec {
    OperatorKind kind;
    int order;

    RationalVector apply(const RationalVector& v) const;
};

// Exact structural identities, checked on every standard basis vector:
//   (i) B^2 = I   (ii) T = B B*   (iii) T J = J T   (iv) (B T)^2 = I
struct StructureReport {
    bool ok = true;
    std::string failed_identity;  // empty when ok
    int witness_index = -1;       // basis vector exhibiting the failure
};

StructureReport structure_checks(int N);

}  // namespace prolate

#endif
