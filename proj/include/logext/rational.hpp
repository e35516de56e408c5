#ifndef LOGEXT_RATIONAL_HPP
#define LOGEXT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace logext {

/// Exact arbitrary-precision fraction. Always stored in lowest terms with
/// positive denominator (mpq canonical form).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { v_.canonicalize(); }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        v_.canonicalize();
    }

    // Parses "a/b" or "a".
    static Rational parse(const std::string& s);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return a.v_ != b.v_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.v_ <= b.v_;
    }
    friend bool operator>(const Rational& a, const Rational& b) {
        return a.v_ > b.v_;
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return a.v_ >= b.v_;
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // "a/b", or just "a" when integral.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;
};

// lcm of |a|, |b|; lcm(0, b) = |b|.
mpz_class lcm_z(const mpz_class& a, const mpz_class& b);

}  // namespace logext

#endif
