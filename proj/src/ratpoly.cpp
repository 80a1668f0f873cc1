#include "hua/ratpoly.hpp"

#include "hua/error.hpp"

#include <algorithm>
#include <sstream>

namespace hua {

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<size_t>(power) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_root(const Rational& root) { return RatPoly({-root, Rational(1)}); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigFloat RatPoly::operator()(const BigFloat& x) const {
  BigFloat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_bigfloat();
  return acc;
}

double RatPoly::operator()(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

std::complex<double> RatPoly::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

RatPoly RatPoly::derivative(int order) const {
  RatPoly out = *this;
  for (int k = 0; k < order; ++k) {
    if (out.c_.empty()) break;
    std::vector<Rational> next(out.c_.size() - 1);
    for (size_t i = 1; i < out.c_.size(); ++i) next[i - 1] = out.c_[i] * Rational(static_cast<long>(i));
    out = RatPoly(std::move(next));
  }
  return out;
}

RatPoly RatPoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the ring: acc = acc*(a x + b) + c_i.
  const RatPoly lin({b, a});
  RatPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= lin;
    acc += RatPoly::constant(*it);
  }
  return acc;
}

RatPoly RatPoly::reversed() const {
  std::vector<Rational> v(c_.rbegin(), c_.rend());
  return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
  if (c_.empty()) return *this;
  RatPoly out = *this;
  const Rational inv = Rational(1) / c_.back();
  out *= inv;
  return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(v);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

RatPoly operator-(RatPoly a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw Error(Errc::invalid_parameters, "polynomial division by zero");
  if (degree() < d.degree()) return {RatPoly(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size() - d.c_.size() + 1);
  const Rational lead_inv = Rational(1) / d.c_.back();
  for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
    const Rational f = rem[static_cast<size_t>(i) + d.c_.size() - 1] * lead_inv;
    quo[static_cast<size_t>(i)] = f;
    if (f.is_zero()) continue;
    for (size_t j = 0; j < d.c_.size(); ++j) rem[static_cast<size_t>(i) + j] -= f * d.c_[j];
  }
  rem.resize(d.c_.size() - 1);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::exact_divide(const RatPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw Error(Errc::internal_inconsistency, "inexact polynomial division");
  return q;
}

std::string RatPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

RatPoly poly_arith(const RatPoly& p, const RatPoly& q, PolyOp op) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
  }
  return {};
}

RatPoly pow(const RatPoly& p, unsigned exponent) {
  RatPoly out = RatPoly::constant(1);
  RatPoly b = p;
  while (exponent) {
    if (exponent & 1u) out *= b;
    b *= b;
    exponent >>= 1;
  }
  return out;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

RatPoly square_free_part(const RatPoly& p) {
  if (p.degree() < 1) return p.monic();
  return p.exact_divide(gcd(p, p.derivative())).monic();
}

std::vector<RatPoly> square_free_decomposition(const RatPoly& p) {
  std::vector<RatPoly> out;
  if (p.degree() < 1) return out;
  const RatPoly dp = p.derivative();
  RatPoly a = gcd(p, dp);
  RatPoly b = p.exact_divide(a);
  RatPoly c = dp.exact_divide(a);
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly f = gcd(b, d);
    out.push_back(f.monic());
    b = b.exact_divide(f);
    c = d.exact_divide(f);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

bool is_square_free(const RatPoly& p) {
  if (p.degree() < 1) return !p.is_zero();
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace hua
