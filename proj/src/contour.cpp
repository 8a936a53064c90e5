#include "prolate/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "prolate/errors.hpp"

namespace prolate {

namespace {

using cd = std::complex<double>;

cd ipow(cd base, int e) {
    cd r(1.0);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

struct Integrand {
    std::vector<double> genfun;  // coefficients of f(v; .), ascending powers
    int N;
    cd z;
    double sigma;

    cd f_at(cd w) const {
        cd acc(0.0);
        for (auto it = genfun.rbegin(); it != genfun.rend(); ++it) acc = acc * w + *it;
        return acc;
    }

    cd kernel_denominator(cd w) const { return 1.0 - z + z * w; }

    cd operator()(double t) const {
        cd w(sigma, t);
        return f_at(w) / (ipow(w, N + 1) * ipow(1.0 - w, N + 1) * kernel_denominator(w));
    }
};

std::vector<double> genfun_coefficients(int N, const RationalVector& v) {
    if (v.size() != static_cast<size_t>(N) + 1)
        throw std::invalid_argument("contour: length mismatch");
    std::vector<double> c(v.size());
    for (int k = 0; k <= N; ++k) c[N - k] = v[k].get_d();
    return c;
}

// T such that the two-sided tail of |integrand|/(2 pi) is below bound.
// |f(v;w)| <= S max(1,|t|)^N, |w|^{N+1} |1-w|^{N+1} >= |t|^{2N+2}, and for
// z != 0, |1-z+zw| >= |z||t|/2 once |t| >= t0 = 2|1-z+z sigma|/|z|.
double choose_truncation(const Integrand& g, double bound) {
    double S = 0.0;
    for (double c : g.genfun) S += std::abs(c);
    S = std::max(S, 1.0);
    const double two_pi = 2.0 * std::numbers::pi;
    double T;
    if (std::abs(g.z) == 0.0) {
        // decay exponent N+2: tail <= 2 S / ((N+1) T^{N+1})
        T = std::pow(2.0 * S / (two_pi * (g.N + 1) * bound), 1.0 / (g.N + 1));
    } else {
        double t0 = 2.0 * std::abs(1.0 - g.z + g.z * g.sigma) / std::abs(g.z) + 1.0;
        // decay exponent N+3: tail <= 4 S / (|z| (N+2) T^{N+2})
        T = std::pow(4.0 * S / (two_pi * std::abs(g.z) * (g.N + 2) * bound),
                     1.0 / (g.N + 2));
        T = std::max(T, t0);
    }
    return std::max(T, 4.0);
}

QuadratureResult line_integral_at(int N, const RationalVector& v, cd z, double sigma,
                                  const QuadratureOptions& opts) {
    if (N < 1)
        throw std::invalid_argument("contour: N >= 1 required for integrable decay");
    Integrand g{genfun_coefficients(N, v), N, z, sigma};

    const double target = opts.tolerance / 10.0;
    const double T = choose_truncation(g, target);

    // Trapezoid pass at step h; checks the singularity guard at every node.
    auto trapezoid = [&](double h, long nodes) {
        cd sum = 0.5 * (g(-T) + g(T));
        for (long i = 1; i < nodes; ++i) {
            double t = -T + h * static_cast<double>(i);
            cd w(sigma, t);
            if (std::abs(g.kernel_denominator(w)) < opts.tolerance)
                throw ContourSingularity("contour: kernel pole within tolerance of node");
            sum += g(t);
        }
        return sum * h;
    };

    double h = opts.initial_step;
    long nodes = std::lround(std::ceil(2.0 * T / h));
    nodes += nodes % 2;  // keep t = 0 on the grid so the guard sees on-line poles
    h = 2.0 * T / static_cast<double>(nodes);
    cd prev = trapezoid(h, nodes);
    cd curr = prev;
    double diff = 0.0;
    for (int pass = 0; pass < opts.max_halvings; ++pass) {
        h /= 2.0;
        nodes *= 2;
        curr = trapezoid(h, nodes);
        diff = std::abs(curr - prev);
        prev = curr;
        if (diff <= target) break;
    }

    const double two_pi = 2.0 * std::numbers::pi;
    QuadratureResult result;
    result.value = curr / two_pi;
    result.error_estimate = diff / two_pi + target;
    result.truncation = T;
    result.step = h;
    return result;
}

}  // namespace

QuadratureResult contour_line_integral(int N, const RationalVector& v, cd z,
                                       const QuadratureOptions& opts) {
    return line_integral_at(N, v, z, 0.5, opts);
}

QuadratureResult integral_operator_value(int N, const RationalVector& v, cd z,
                                         const QuadratureOptions& opts) {
    if (std::abs(z) == 0.0) return contour_line_integral(N, v, z, opts);

    const cd pole = 1.0 - 1.0 / z;  // kernel zero 1 - z + z w = 0
    const double offset = pole.real() - 0.5;

    if (std::abs(offset) <= 0.1) {
        // Pole within reach of Re(w) = 1/2: shift the contour to Re(w) = 3/4,
        // which keeps the pole on the left and the poles at 0 and 1 on their
        // original sides. No residue term is picked up.
        return line_integral_at(N, v, z, 0.75, opts);
    }

    QuadratureResult result = contour_line_integral(N, v, z, opts);
    if (offset > 0.0) {
        // The pole sits right of the line; continuation adds its residue
        // f(pole) / [pole^{N+1} (1-pole)^{N+1} z].
        Integrand g{genfun_coefficients(N, v), N, z, 0.5};
        result.value += g.f_at(pole) / (ipow(pole, N + 1) * ipow(1.0 - pole, N + 1) * z);
    }
    return result;
}

}  // namespace prolate
