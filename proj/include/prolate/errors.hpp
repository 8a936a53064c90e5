#ifndef PROLATE_ERRORS_HPP
#define PROLATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prolate {

// Reduction of a rational whose denominator shares a factor with the modulus.
struct NonInvertibleDenominator : std::domain_error {
    explicit NonInvertibleDenominator(const std::string& what)
        : std::domain_error(what) {}
};

// A terminating hypergeometric series hit a zero lower-parameter Pochhammer
// before its termination index.
struct PoleBeforeTermination : std::domain_error {
    explicit PoleBeforeTermination(const std::string& what)
        : std::domain_error(what) {}
};

// A scaled Moebius substitution was requested with a scale degree smaller
// than the polynomial degree.
struct NonPolynomialResult : std::domain_error {
    explicit NonPolynomialResult(const std::string& what)
        : std::domain_error(what) {}
};

// The kernel pole lies on (or within guard distance of) the discretized
// integration contour.
struct ContourSingularity : std::domain_error {
    explicit ContourSingularity(const std::string& what)
        : std::domain_error(what) {}
};

// A vector passed to an eigen-identity check is not an eigenvector for the
// claimed eigenvalue.
struct NotAnEigenvector : std::domain_error {
    explicit NotAnEigenvector(const std::string& what)
        : std::domain_error(what) {}
};

}  // namespace prolate

#endif
