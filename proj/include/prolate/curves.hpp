#ifndef PROLATE_CURVES_HPP
#define PROLATE_CURVES_HPP

#include <optional>
#include <vector>

#include "prolate/polynomial.hpp"
#include "prolate/rational.hpp"

namespace prolate {

// One fiber of the Legendre family E_z : y^2 = x(x-1)(x-z) over F_p.
struct CurveCount {
    long p = 0;
    long z = 0;
    long points = 0;  // #E_z(F_p), including the point at infinity
    long trace = 0;   // p + 1 - points
};

// Character-sum count: points = 1 + sum_x (1 + legendre(x(x-1)(x-z), p)).
// Requires p an odd prime and z != 0, 1 mod p (the singular fibers).
CurveCount count_points(long p, long z);

// Finite-field period sum_x legendre(x(x-1)(x-z), p); equals -trace.
long period_sum(long p, long z);

// H_p(z) = sum_{k=0}^{(p-1)/2} binom((p-1)/2, k)^2 z^k over Z/p.
ModPoly hasse_poly(long p);

// (-1)^{(p-1)/2} H_p(z) = 1 - #E_z(F_p) mod p for every z != 0, 1.
bool hasse_check(long p);
std::optional<long> hasse_check_witness(long p);

// f(v; z) = (#E_z(F_p) - 1)^2 mod p for every z != 0, 1, where v is the
// fixed vector of the Pascal matrix of order p-1 reduced mod p.
bool point_count_congruence_check(long p);
std::optional<long> point_count_congruence_witness(long p);

// For N = p-1: 2F1(-N/2, -3N/2-1; -N; z) = 2F1(-N/2, N/2+1; -N; z) mod p
// as polynomials.
bool pfaff_congruence_check(long p);

// For N = p-1: H_p(z) = 2F1(-N/2, N/2+1; -N; z) mod p as polynomials.
bool hasse_hyp_congruence_check(long p);

// The six-map Moebius group {z, 1-z, 1/z, 1/(1-z), 1-1/z, (z-1)/z} fixes
// the value of the fixed generating function pointwise mod p.
bool mobius_orbit_check(long p);
std::optional<long> mobius_orbit_witness(long p);

// All z with H_p(z) = 0 mod p, cross-checked against trace 0.
struct SupersingularReport {
    long p = 0;
    std::vector<long> supersingular_z;
    bool trace_cross_check = false;  // roots match {z : trace = 0} exactly
};

SupersingularReport supersingular_scan(long p);

}  // namespace prolate

#endif
