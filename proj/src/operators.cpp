#include "prolate/operators.hpp"

#include <stdexcept>

#include "prolate/numbers.hpp"

namespace prolate {

namespace {

void check_length(int N, const RationalVector& v, const char* who) {
    if (N < 0) throw std::invalid_argument(std::string(who) + ": negative order");
    if (v.size() != static_cast<size_t>(N) + 1)
        throw std::invalid_argument(std::string(who) + ": expected length " +
                                    std::to_string(N + 1) + ", got " +
                                    std::to_string(v.size()));
}

}  // namespace

RationalVector pascal_apply(int N, const RationalVector& v) {
    check_length(N, v, "pascal_apply");
    RationalVector out(v.size(), Rational(0));
    for (int j = 0; j <= N; ++j) {
        // binom(j+k, j) built incrementally across k to avoid factorials.
        Integer c = 1;
        Rational acc(0);
        for (int k = 0; k <= N; ++k) {
            acc += Rational(c) * v[k];
            c = c * (j + k + 1) / (k + 1);  // exact
        }
        out[j] = acc;
    }
    return out;
}

Integer jacobi_off_diagonal(int N, long n) {
    Integer m(N + 1), x(n);
    return m * m * x - x * x * x;
}

Integer jacobi_diagonal(int N, long n) {
    Integer m(N + 1), x(n);
    return 2 * x * x * x + 3 * x * x + 2 * x - m * m * x;
}

RationalVector jacobi_apply(int N, const RationalVector& v) {
    check_length(N, v, "jacobi_apply");
    RationalVector out(v.size(), Rational(0));
    for (int n = 0; n <= N; ++n) {
        Rational acc = Rational(jacobi_diagonal(N, n)) * v[n];
        if (n > 0) acc += Rational(jacobi_off_diagonal(N, n)) * v[n - 1];
        if (n < N) acc += Rational(jacobi_off_diagonal(N, n + 1)) * v[n + 1];
        out[n] = acc;
    }
    return out;
}

RationalVector binomial_apply(int N, const RationalVector& v) {
    check_length(N, v, "binomial_apply");
    RationalVector out(v.size(), Rational(0));
    for (int j = 0; j <= N; ++j) {
        Rational acc(0);
        for (int k = 0; k <= j; ++k) {
            Rational term = Rational(binomial(j, k)) * v[k];
            if (k % 2) acc -= term;
            else acc += term;
        }
        out[j] = acc;
    }
    return out;
}

RationalVector binomial_adjoint_apply(int N, const RationalVector& v) {
    check_length(N, v, "binomial_adjoint_apply");
    RationalVector out(v.size(), Rational(0));
    for (int j = 0; j <= N; ++j) {
        Rational acc(0);
        for (int k = j; k <= N; ++k) acc += Rational(binomial(k, j)) * v[k];
        out[j] = (j % 2) ? -acc : acc;
    }
    return out;
}

RationalVector OperatorSpec::apply(const RationalVector& v) const {
    switch (kind) {
        case OperatorKind::Pascal: return pascal_apply(order, v);
        case OperatorKind::Jacobi: return jacobi_apply(order, v);
        case OperatorKind::BinomialForward: return binomial_apply(order, v);
        case OperatorKind::BinomialAdjoint: return binomial_adjoint_apply(order, v);
    }
    throw std::logic_error("OperatorSpec: unknown kind");
}

StructureReport structure_checks(int N) {
    for (int i = 0; i <= N; ++i) {
        RationalVector e(static_cast<size_t>(N) + 1, Rational(0));
        e[i] = 1;

        if (binomial_apply(N, binomial_apply(N, e)) != e)
            return {false, "B^2 = I", i};
        if (binomial_apply(N, binomial_adjoint_apply(N, e)) != pascal_apply(N, e))
            return {false, "T = B B*", i};
        if (pascal_apply(N, jacobi_apply(N, e)) != jacobi_apply(N, pascal_apply(N, e)))
            return {false, "T J = J T", i};
        if (binomial_apply(N, pascal_apply(N, binomial_apply(N, pascal_apply(N, e)))) != e)
            return {false, "(B T)^2 = I", i};
    }
    return {};
}

}  // namespace prolate
