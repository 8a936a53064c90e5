#include "prolate/polynomial.hpp"

#include <sstream>

namespace prolate {

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
    int db = b.degree();
    if (db < 0) throw std::invalid_argument("divmod: division by zero polynomial");
    RationalPoly rem = a.trimmed();
    int da = rem.degree();
    if (da < db) return {RationalPoly::zero(Rational(0)), rem};

    std::vector<Rational> q(static_cast<size_t>(da - db) + 1, Rational(0));
    std::vector<Rational> r = rem.resized(da).coeffs();
    const Rational lead = b.coeff(db);
    for (int i = da - db; i >= 0; --i) {
        Rational f = r[i + db] / lead;
        q[i] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) r[i + j] -= f * b.coeff(j);
    }
    return {RationalPoly(std::move(q)), RationalPoly(std::move(r)).trimmed()};
}

std::string poly_to_string(const RationalPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= f.degree(); ++i) {
        Rational c = f.coeff(i);
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        Rational a = abs(c);
        first = false;
        if (i == 0) {
            out << to_string(a);
            continue;
        }
        if (a != 1) out << to_string(a) << "*";
        out << var;
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

}  // namespace prolate
