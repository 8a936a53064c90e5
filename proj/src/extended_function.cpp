#include "prolate/extended_function.hpp"

#include <sstream>
#include <stdexcept>

namespace prolate {

namespace {

const RationalPoly& one_minus_z() {
    static const RationalPoly p(std::vector<Rational>{Rational(1), Rational(-1)});
    return p;
}

RationalPoly scale_poly(const RationalPoly& q, long z_pow, long omz_pow) {
    RationalPoly r = q;
    if (z_pow > 0) r = r.shifted(static_cast<int>(z_pow));
    for (long i = 0; i < omz_pow; ++i) r = r * one_minus_z();
    return r;
}

}  // namespace

ExtendedFunction::ExtendedFunction() : q_(RationalPoly::zero(Rational(0))) {}

ExtendedFunction::ExtendedFunction(RationalPoly q, long a, long b)
    : q_(std::move(q)), a_(a), b_(b) {
    normalize();
}

void ExtendedFunction::normalize() {
    q_ = q_.trimmed();
    if (q_.is_zero()) {
        a_ = b_ = 0;
        return;
    }
    int low = 0;
    while (q_.coeff(low) == 0) ++low;
    if (low > 0) {
        std::vector<Rational> c(q_.coeffs().begin() + low, q_.coeffs().end());
        q_ = RationalPoly(std::move(c));
        a_ += low;
    }
    while (q_.eval(Rational(1)) == 0) {
        auto [quot, rem] = divmod(q_, one_minus_z());
        if (!rem.is_zero()) throw std::logic_error("ExtendedFunction: inexact 1-z division");
        q_ = quot;
        b_ += 1;
    }
}

ExtendedFunction ExtendedFunction::operator+(const ExtendedFunction& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    const long a = std::min(a_, rhs.a_);
    const long b = std::min(b_, rhs.b_);
    RationalPoly sum = scale_poly(q_, a_ - a, b_ - b) +
                       scale_poly(rhs.q_, rhs.a_ - a, rhs.b_ - b);
    return ExtendedFunction(std::move(sum), a, b);
}

ExtendedFunction ExtendedFunction::operator-(const ExtendedFunction& rhs) const {
    return *this + (-rhs);
}

ExtendedFunction ExtendedFunction::operator*(const ExtendedFunction& rhs) const {
    if (is_zero() || rhs.is_zero()) return ExtendedFunction();
    return ExtendedFunction(q_ * rhs.q_, a_ + rhs.a_, b_ + rhs.b_);
}

ExtendedFunction ExtendedFunction::operator*(const Rational& s) const {
    if (s == 0) return ExtendedFunction();
    return ExtendedFunction(q_ * s, a_, b_);
}

ExtendedFunction ExtendedFunction::operator-() const {
    if (is_zero()) return *this;
    return ExtendedFunction(-q_, a_, b_);
}

ExtendedFunction ExtendedFunction::derivative() const {
    if (is_zero()) return ExtendedFunction();
    RationalPoly z_one_minus_z = one_minus_z().shifted(1);  // z(1-z)
    RationalPoly num = q_.derivative() * z_one_minus_z +
                       q_ * one_minus_z() * Rational(a_) -
                       q_.shifted(1) * Rational(b_);
    return ExtendedFunction(std::move(num), a_ - 1, b_ - 1);
}

bool ExtendedFunction::operator==(const ExtendedFunction& rhs) const {
    if (is_zero() || rhs.is_zero()) return is_zero() && rhs.is_zero();
    return a_ == rhs.a_ && b_ == rhs.b_ && q_ == rhs.q_;
}

Rational ExtendedFunction::eval(const Rational& x) const {
    if (is_zero()) return Rational(0);
    if ((a_ < 0 && x == 0) || (b_ < 0 && x == 1))
        throw std::domain_error("ExtendedFunction::eval: pole at sample point");
    Rational value = q_.eval(x);
    auto apply_power = [&value](const Rational& base, long e) {
        if (e >= 0)
            for (long i = 0; i < e; ++i) value *= base;
        else
            for (long i = 0; i < -e; ++i) value /= base;
    };
    apply_power(x, a_);
    apply_power(Rational(1) - x, b_);
    return value;
}

std::string ExtendedFunction::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    out << "(" << poly_to_string(q_) << ")";
    if (a_ != 0) out << " * z^" << a_;
    if (b_ != 0) out << " * (1-z)^" << b_;
    return out.str();
}

}  // namespace prolate
