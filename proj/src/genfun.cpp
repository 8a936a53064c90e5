#include "prolate/genfun.hpp"

#include <stdexcept>

#include "prolate/errors.hpp"
#include "prolate/hypergeometric.hpp"
#include "prolate/operators.hpp"

namespace prolate {

namespace {

// (1-z)^e
RationalPoly one_minus_z_pow(unsigned e) {
    RationalPoly base(std::vector<Rational>{Rational(1), Rational(-1)});
    return poly_pow(base, e);
}

// (z-1)^e
RationalPoly z_minus_one_pow(unsigned e) {
    RationalPoly base(std::vector<Rational>{Rational(-1), Rational(1)});
    return poly_pow(base, e);
}

}  // namespace

RationalPoly gen_poly(const RationalVector& v) {
    if (v.empty()) throw std::invalid_argument("gen_poly: empty vector");
    std::vector<Rational> c(v.size());
    const size_t N = v.size() - 1;
    for (size_t k = 0; k <= N; ++k) c[N - k] = v[k];
    return RationalPoly(std::move(c));
}

RationalVector gen_poly_vector(const RationalPoly& f, int N) {
    if (f.degree() > N)
        throw std::invalid_argument("gen_poly_vector: polynomial degree exceeds order");
    RationalVector v(static_cast<size_t>(N) + 1, Rational(0));
    for (int k = 0; k <= N; ++k) v[k] = f.coeff(N - k);
    return v;
}

RationalPoly mobius_substitute(const RationalPoly& f, MobiusMap map, int d) {
    if (map == MobiusMap::OneMinusZ) {
        RationalPoly g(std::vector<Rational>{Rational(1), Rational(-1)});
        return compose(f, g);
    }
    const int deg = f.degree();
    if (d < deg)
        throw NonPolynomialResult("mobius_substitute: scale degree " + std::to_string(d) +
                                  " below polynomial degree " + std::to_string(deg));
    RationalPoly acc = RationalPoly::zero(Rational(0));
    for (int j = 0; j <= deg; ++j) {
        Rational cj = f.coeff(j);
        if (cj == 0) continue;
        switch (map) {
            case MobiusMap::ZOverZMinusOne:
                // c_j (z/(z-1))^j (1-z)^d = c_j (-1)^j z^j (1-z)^{d-j}
                acc = acc + one_minus_z_pow(d - j).shifted(j) *
                                ((j % 2) ? -cj : cj);
                break;
            case MobiusMap::OneMinusOneOverZ:
                // c_j ((z-1)/z)^j z^d = c_j (z-1)^j z^{d-j}
                acc = acc + z_minus_one_pow(j).shifted(d - j) * cj;
                break;
            case MobiusMap::OneOverZ:
                acc = acc + RationalPoly::constant(cj).shifted(d - j);
                break;
            case MobiusMap::OneMinusZ:
                break;  // handled above
        }
    }
    return acc.resized(std::max(acc.degree(), d));
}

RationalPoly pascal_genfun_image(int N, const RationalVector& v) {
    if (v.size() != static_cast<size_t>(N) + 1)
        throw std::invalid_argument("pascal_genfun_image: length mismatch");
    // z^{2N+1} (z-1)^{-(N+1)} f(v; 1-1/z) = G(z) / (z-1)^{N+1} with
    // G = z^{N+1} * [z^N f(v; 1-1/z)]; the polynomial part is the Euclidean
    // quotient of G by (z-1)^{N+1}.
    RationalPoly G = mobius_substitute(gen_poly(v), MobiusMap::OneMinusOneOverZ, N)
                         .shifted(N + 1);
    auto [quot, rem] = divmod(G, z_minus_one_pow(N + 1));
    (void)rem;
    return quot.resized(std::max(quot.degree(), N));
}

bool adjoint_genfun_identity_check(int N, const RationalVector& v) {
    RationalPoly lhs = gen_poly(binomial_adjoint_apply(N, v));
    RationalPoly rhs = mobius_substitute(gen_poly(v), MobiusMap::ZOverZMinusOne, N);
    if (N % 2) rhs = -rhs;  // (z-1)^N = (-1)^N (1-z)^N
    return lhs == rhs;
}

bool eigen_relation_check(int N, const RationalVector& v, const Rational& lambda) {
    RationalVector Tv = pascal_apply(N, v);
    for (int k = 0; k <= N; ++k)
        if (Tv[k] != lambda * v[k])
            throw NotAnEigenvector("eigen_relation_check: v is not a lambda-eigenvector");
    RationalPoly lhs = gen_poly(v) * lambda;
    RationalPoly rhs =
        mobius_substitute(gen_poly(binomial_apply(N, v)), MobiusMap::ZOverZMinusOne, N);
    if (N % 2) rhs = -rhs;
    return lhs == rhs;
}

namespace {

void require_even(int N, const char* who) {
    if (N < 0 || N % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": N must be even and >= 0");
}

}  // namespace

RationalPoly hyp_factor(int N) {
    require_even(N, "hyp_factor");
    return hyp2f1_terminating(
        HypergeometricSpec(frac(-N, 2), frac(N, 2) + 1, frac(-N), N / 2));
}

RationalPoly hyp_cofactor(int N) {
    require_even(N, "hyp_cofactor");
    return hyp2f1_terminating(
        HypergeometricSpec(frac(-N, 2), frac(-3 * N, 2) - 1, frac(-N), N / 2));
}

bool connection_identity_check(int N) {
    require_even(N, "connection_identity_check");
    RationalPoly P = hyp_factor(N);
    RationalPoly lhs = hyp_cofactor(N);
    RationalPoly rhs = P * one_minus_z_pow(N + 1) +
                       mobius_substitute(P, MobiusMap::OneMinusZ, 0).shifted(N + 1) *
                           Rational((N / 2) % 2 ? -1 : 1);
    return lhs == rhs;
}

RationalPoly pascal_fixed_genfun(int N) {
    require_even(N, "pascal_fixed_genfun");
    return (hyp_factor(N) * hyp_cofactor(N)).resized(N);
}

RationalVector pascal_fixed_vector(int N) {
    return gen_poly_vector(pascal_fixed_genfun(N), N);
}

int binomial_sign_on_fixed_vector(int N) {
    RationalVector v = pascal_fixed_vector(N);
    RationalVector Bv = binomial_apply(N, v);
    bool plus = true, minus = true;
    for (int k = 0; k <= N; ++k) {
        if (Bv[k] != v[k]) plus = false;
        if (Bv[k] != -v[k]) minus = false;
    }
    if (plus) return 1;
    if (minus) return -1;
    throw std::logic_error("binomial_sign_on_fixed_vector: B v is not +-v");
}

}  // namespace prolate
