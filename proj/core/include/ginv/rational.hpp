#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ginv {

/// Exact rational number. Values are always kept in lowest terms with a
/// positive denominator; every operation is exact.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) { v_ = mpz_class(n); }
  Rational(const mpz_class &n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }

  // Parses "p" or "p/q" with optional sign; rejects anything else.
  static Rational parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        Rational r;
        r.v_ = mpq_class(mpz_class(s));
        return r;
      }
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0)
        throw std::invalid_argument("zero denominator");
      Rational r;
      r.v_ = mpq_class(num, den);
      r.v_.canonicalize();
      return r;
    } catch (const std::invalid_argument &) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  std::string str() const {
    if (is_integer())
      return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o) {
    if (o.is_zero())
      throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational &a, const Rational &b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational &a, const Rational &b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational &a, const Rational &b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational &a, const Rational &b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational &a, const Rational &b) {
    return a.v_ >= b.v_;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
  }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

} // namespace ginv
