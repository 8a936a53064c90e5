#include "prolate/curves.hpp"

#include <algorithm>
#include <stdexcept>

#include "prolate/genfun.hpp"
#include "prolate/hypergeometric.hpp"
#include "prolate/numbers.hpp"

namespace prolate {

namespace {

void check_fiber(long p, long z, const char* who) {
    if (!is_odd_prime(Integer(p)))
        throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
    long r = z % p;
    if (r < 0) r += p;
    if (r == 0 || r == 1)
        throw std::invalid_argument(std::string(who) + ": z in {0, 1} gives a singular curve");
}

}  // namespace

long period_sum(long p, long z) {
    check_fiber(p, z, "period_sum");
    const Integer ip(p);
    long sum = 0;
    for (long x = 0; x < p; ++x) {
        Integer f = Integer(x) * (x - 1) % ip * (x - z) % ip;
        sum += legendre_symbol(f, ip);
    }
    return sum;
}

CurveCount count_points(long p, long z) {
    check_fiber(p, z, "count_points");
    long zz = z % p;
    if (zz < 0) zz += p;
    CurveCount c;
    c.p = p;
    c.z = zz;
    c.points = 1 + p + period_sum(p, zz);
    c.trace = p + 1 - c.points;
    return c;
}

ModPoly hasse_poly(long p) {
    if (!is_odd_prime(Integer(p)))
        throw std::invalid_argument("hasse_poly: p must be an odd prime");
    const Integer ip(p);
    const long m = (p - 1) / 2;
    std::vector<ModInt> coeffs;
    coeffs.reserve(static_cast<size_t>(m) + 1);
    for (long k = 0; k <= m; ++k) {
        Integer b = binomial(static_cast<unsigned long>(m), k);
        coeffs.emplace_back(b * b, ip);
    }
    return ModPoly(std::move(coeffs));
}

std::optional<long> hasse_check_witness(long p) {
    ModPoly H = hasse_poly(p);
    const Integer ip(p);
    const ModInt sign(((p - 1) / 2) % 2 ? Integer(-1) : Integer(1), ip);
    for (long z = 2; z < p; ++z) {
        ModInt lhs = sign * H.eval(ModInt(Integer(z), ip));
        ModInt rhs(Integer(1 - count_points(p, z).points), ip);
        if (lhs != rhs) return z;
    }
    return std::nullopt;
}

bool hasse_check(long p) { return !hasse_check_witness(p).has_value(); }

std::optional<long> point_count_congruence_witness(long p) {
    if (!is_odd_prime(Integer(p)))
        throw std::invalid_argument("point_count_congruence: p must be an odd prime");
    const Integer ip(p);
    const int N = static_cast<int>(p) - 1;
    ModPoly f = reduce_mod(gen_poly(pascal_fixed_vector(N)), ip);
    for (long z = 2; z < p; ++z) {
        ModInt lhs = f.eval(ModInt(Integer(z), ip));
        ModInt e(Integer(count_points(p, z).points - 1), ip);
        if (lhs != e * e) return z;
    }
    return std::nullopt;
}

bool point_count_congruence_check(long p) {
    return !point_count_congruence_witness(p).has_value();
}

bool pfaff_congruence_check(long p) {
    if (!is_odd_prime(Integer(p)))
        throw std::invalid_argument("pfaff_congruence_check: p must be an odd prime");
    const Integer ip(p);
    const int N = static_cast<int>(p) - 1;
    return reduce_mod(hyp_cofactor(N), ip) == reduce_mod(hyp_factor(N), ip);
}

bool hasse_hyp_congruence_check(long p) {
    const Integer ip(p);
    const int N = static_cast<int>(p) - 1;
    return hasse_poly(p) == reduce_mod(hyp_factor(N), ip);
}

namespace {

// The six substitutions as maps on F_p \ {0, 1}.
long mobius_image(int which, long z, long p, const Integer& ip) {
    auto inv = [&](long a) {
        Integer r;
        mpz_invert(r.get_mpz_t(), Integer(a).get_mpz_t(), ip.get_mpz_t());
        return r.get_si();
    };
    long r = 0;
    switch (which) {
        case 0: r = z; break;
        case 1: r = 1 - z; break;
        case 2: r = inv(z); break;
        case 3: r = inv(1 - z); break;
        case 4: r = 1 - inv(z); break;
        case 5: r = ((z - 1) % p) * inv(z) % p; break;
    }
    r %= p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

std::optional<long> mobius_orbit_witness(long p) {
    if (!is_odd_prime(Integer(p)))
        throw std::invalid_argument("mobius_orbit_check: p must be an odd prime");
    const Integer ip(p);
    const int N = static_cast<int>(p) - 1;
    ModPoly f = reduce_mod(pascal_fixed_genfun(N), ip);
    std::vector<ModInt> values;
    values.reserve(static_cast<size_t>(p));
    for (long z = 0; z < p; ++z) values.push_back(f.eval(ModInt(Integer(z), ip)));
    for (long z = 2; z < p; ++z)
        for (int map = 1; map < 6; ++map)
            if (values[static_cast<size_t>(z)] !=
                values[static_cast<size_t>(mobius_image(map, z, p, ip))])
                return z;
    return std::nullopt;
}

bool mobius_orbit_check(long p) { return !mobius_orbit_witness(p).has_value(); }

SupersingularReport supersingular_scan(long p) {
    ModPoly H = hasse_poly(p);
    const Integer ip(p);
    SupersingularReport report;
    report.p = p;
    std::vector<long> trace_zero;
    for (long z = 2; z < p; ++z) {
        if (H.eval(ModInt(Integer(z), ip)).is_zero()) report.supersingular_z.push_back(z);
        if (count_points(p, z).trace == 0) trace_zero.push_back(z);
    }
    report.trace_cross_check = report.supersingular_z == trace_zero;
    return report;
}

}  // namespace prolate
