#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hua {

// 50 decimal digits; used wherever a numeric (non-exact) value is needed.
using BigFloat = boost::multiprecision::mpfr_float_50;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT: implicit by design of the arithmetic API

  Rational(long num, long den);
  explicit Rational(mpq_class q);
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "p", "p/q", and decimal literals such as "-1.25" or "3e-4".
  // Decimals are converted exactly in base 10.
  static Rational parse(std::string_view text);

  const mpq_class& mpq() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  double to_double() const { return q_.get_d(); }
  BigFloat to_bigfloat() const;

  // "p" for integers, otherwise "p/q".
  std::string str() const;
  // Decimal rendering with the given number of fractional digits, rounded half away from zero.
  std::string decimal(int digits) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

Rational pow(const Rational& base, unsigned exponent);
// Nearest multiple of 2^-bits below x.
Rational floor_dyadic(const Rational& x, unsigned bits);
// The rational of smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);
mpz_class floor(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigFloat to_bigfloat(const Rational& r);

}  // namespace hua
