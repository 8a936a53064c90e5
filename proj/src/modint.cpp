#include "prolate/modint.hpp"

#include <stdexcept>

#include "prolate/errors.hpp"
#include "prolate/numbers.hpp"

namespace prolate {

ModInt::ModInt(const Integer& value, const Integer& modulus) : modulus_(modulus) {
    if (!odd_prime_power(modulus))
        throw std::invalid_argument("ModInt: modulus " + to_string(modulus) +
                                    " is not an odd prime power");
    value_ = value % modulus_;
    if (value_ < 0) value_ += modulus_;
}

void ModInt::check_same_modulus(const ModInt& rhs) const {
    if (modulus_ != rhs.modulus_)
        throw std::invalid_argument("ModInt: mixed moduli " + to_string(modulus_) +
                                    " and " + to_string(rhs.modulus_));
}

ModInt ModInt::operator+(const ModInt& rhs) const {
    check_same_modulus(rhs);
    Integer v = value_ + rhs.value_;
    if (v >= modulus_) v -= modulus_;
    return ModInt(raw_tag{}, std::move(v), modulus_);
}

ModInt ModInt::operator-(const ModInt& rhs) const {
    check_same_modulus(rhs);
    Integer v = value_ - rhs.value_;
    if (v < 0) v += modulus_;
    return ModInt(raw_tag{}, std::move(v), modulus_);
}

ModInt ModInt::operator*(const ModInt& rhs) const {
    check_same_modulus(rhs);
    return ModInt(raw_tag{}, (value_ * rhs.value_) % modulus_, modulus_);
}

ModInt ModInt::operator-() const {
    Integer v = value_ == 0 ? Integer(0) : modulus_ - value_;
    return ModInt(raw_tag{}, std::move(v), modulus_);
}

ModInt ModInt::inverse() const {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t()) == 0)
        throw NonInvertibleDenominator("ModInt: " + to_string(value_) +
                                       " is not a unit mod " + to_string(modulus_));
    return ModInt(raw_tag{}, std::move(inv), modulus_);
}

ModInt ModInt::pow(const Integer& e) const {
    if (e < 0) return inverse().pow(-e);
    return ModInt(raw_tag{}, pow_mod(value_, e, modulus_), modulus_);
}

bool ModInt::operator==(const ModInt& rhs) const {
    check_same_modulus(rhs);
    return value_ == rhs.value_;
}

ModInt rational_to_mod(const Rational& x, const Integer& modulus) {
    ModInt num(x.get_num(), modulus);
    ModInt den(x.get_den(), modulus);
    return num * den.inverse();
}

}  // namespace prolate
