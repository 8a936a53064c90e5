#ifndef PROLATE_CONTOUR_HPP
#define PROLATE_CONTOUR_HPP

#include <complex>

#include "prolate/rational.hpp"

namespace prolate {

struct QuadratureOptions {
    double tolerance = 1e-8;  // target accuracy; also the singularity guard
    double initial_step = 0.25;
    int max_halvings = 18;
};

struct QuadratureResult {
    std::complex<double> value;
    double error_estimate = 0.0;  // step-halving difference plus tail bound
    double truncation = 0.0;      // half-length T of the discretized contour
    double step = 0.0;            // final step h
};

// (1/2 pi i) Integral over Re(w) = 1/2 of
//     f(v; w) / [ w^{N+1} (1-w)^{N+1} (1 - z + z w) ] dw
// by trapezoid rule on w = 1/2 + i t, t in [-T, T], with T from an explicit
// tail bound and the step halved until two passes agree within tolerance/10.
// Requires N >= 1 so the integrand decays at least like |w|^{-4}. Throws
// ContourSingularity when |1 - z + z w| < tolerance at any contour node.
QuadratureResult contour_line_integral(int N, const RationalVector& v,
                                       std::complex<double> z,
                                       const QuadratureOptions& opts = {});

// Value of the same integral continued analytically in z across the pole
// locus Re((z-1)/z) = 1/2 of the kernel: the contour is shifted to keep the
// kernel pole on its left, which adds the explicit pole residue once the
// pole lies strictly right of Re(w) = 1/2. On an eigenvector of the Pascal
// matrix this equals lambda * f(v; z) for every z.
QuadratureResult integral_operator_value(int N, const RationalVector& v,
                                         std::complex<double> z,
                                         const QuadratureOptions& opts = {});

}  // namespace prolate

#endif
