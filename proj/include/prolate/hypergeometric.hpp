#ifndef PROLATE_HYPERGEOMETRIC_HPP
#define PROLATE_HYPERGEOMETRIC_HPP

#include "prolate/polynomial.hpp"
#include "prolate/rational.hpp"

namespace prolate {

// Terminating Gauss series 2F1(a, b; c; z) truncated by a = -degree. The
// lower parameter c may be a nonpositive integer only if the series
// terminates at or before the pole index.
struct HypergeometricSpec {
    Rational a;
    Rational b;
    Rational c;
    long degree = 0;

    HypergeometricSpec(Rational a_, Rational b_, Rational c_, long degree_);
};

// sum_{k=0}^{d} (a)_k (b)_k / ((c)_k k!) z^k with exact rational
// coefficients. Throws PoleBeforeTermination if (c)_k vanishes under a
// nonzero numerator for some k <= d.
RationalPoly hyp2f1_terminating(const HypergeometricSpec& spec);

}  // namespace prolate

#endif
