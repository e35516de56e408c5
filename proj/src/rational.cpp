#include "logext/rational.hpp"

#include <ostream>

#include "logext/errors.hpp"

namespace logext {

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator: " + s);
        return Rational(mpz_class(s.substr(0, slash)), den);
    } catch (const std::invalid_argument&) {
        throw Error("cannot parse rational: " + s);
    }
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace logext
