#include "prolate/hypergeometric.hpp"

#include <stdexcept>

#include "prolate/errors.hpp"

namespace prolate {

HypergeometricSpec::HypergeometricSpec(Rational a_, Rational b_, Rational c_, long degree_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), degree(degree_) {
    if (degree < 0) throw std::invalid_argument("HypergeometricSpec: negative degree");
    if (a != Rational(-degree))
        throw std::invalid_argument(
            "HypergeometricSpec: series must terminate via a = -degree");
}

RationalPoly hyp2f1_terminating(const HypergeometricSpec& spec) {
    std::vector<Rational> coeffs(static_cast<size_t>(spec.degree) + 1, Rational(0));
    Rational term(1);
    coeffs[0] = term;
    for (long k = 0; k < spec.degree; ++k) {
        Rational num = (spec.a + k) * (spec.b + k);
        Rational den = (spec.c + k) * Rational(k + 1);
        if (den == 0) {
            if (term * num == 0) break;  // numerator terminated first
            throw PoleBeforeTermination("hyp2f1_terminating: (c)_k vanishes at k = " +
                                        std::to_string(k + 1) +
                                        " before termination degree " +
                                        std::to_string(spec.degree));
        }
        term *= num / den;
        coeffs[static_cast<size_t>(k) + 1] = term;
    }
    return RationalPoly(std::move(coeffs));
}

}  // namespace prolate
