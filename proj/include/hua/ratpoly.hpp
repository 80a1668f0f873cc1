#pragma once

#include "hua/rational.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hua {

// Dense univariate polynomial with exact rational coefficients.
// coeffs()[i] is the coefficient of x^i; the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(std::initializer_list<Rational> coeffs);
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int power);
  // x - root
  static RatPoly linear_root(const Rational& root);

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  // Coefficient of x^i, zero beyond the degree.
  Rational coeff(int i) const;
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  BigFloat operator()(const BigFloat& x) const;
  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;
  // Sign of p(x) without materialising the value in a caller-visible type.
  int sign_at(const Rational& x) const { return (*this)(x).sign(); }

  RatPoly derivative(int order = 1) const;
  // p(a*x + b)
  RatPoly compose_affine(const Rational& a, const Rational& b) const;
  // x^deg * p(1/x)
  RatPoly reversed() const;
  RatPoly monic() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend RatPoly operator-(RatPoly a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  // Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
  // Throws InternalInconsistency if d does not divide *this.
  RatPoly exact_divide(const RatPoly& d) const;
  bool divisible_by(const RatPoly& d) const { return divmod(d).second.is_zero(); }

  // Horner-style rendering, e.g. "3/2*x^2 - x + 1".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

enum class PolyOp { add, sub, mul };
RatPoly poly_arith(const RatPoly& p, const RatPoly& q, PolyOp op);

RatPoly pow(const RatPoly& p, unsigned exponent);
// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);
// p / gcd(p, p'), made monic.
RatPoly square_free_part(const RatPoly& p);
// Yun's algorithm: p = lc * prod f_i^i, returned as {f_1, f_2, ...} (monic, possibly constant 1).
std::vector<RatPoly> square_free_decomposition(const RatPoly& p);
bool is_square_free(const RatPoly& p);

}  // namespace hua
