#include "hua/rational.hpp"

#include "hua/error.hpp"

#include <cctype>
#include <ostream>
#include <regex>

namespace hua {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::non_square_free: return "NonSquareFree";
    case Errc::tolerance_not_positive: return "ToleranceNotPositive";
    case Errc::unknown_type: return "UnknownType";
    case Errc::invalid_parameters: return "InvalidParameters";
    case Errc::order_out_of_range: return "OrderOutOfRange";
    case Errc::leading_coefficient_not_positive: return "LeadingCoefficientNotPositive";
    case Errc::wrong_degree: return "WrongDegree";
    case Errc::degree_zero: return "DegreeZero";
    case Errc::mu_not_positive: return "MuNotPositive";
    case Errc::search_limit_exceeded: return "SearchLimitExceeded";
    case Errc::boundary_mu: return "BoundaryMu";
    case Errc::oracle_non_convergence: return "OracleNonConvergence";
    case Errc::unsupported_type: return "UnsupportedType";
    case Errc::point_outside_domain: return "PointOutsideDomain";
    case Errc::quadrature_budget_exceeded: return "QuadratureBudgetExceeded";
    case Errc::parse_error: return "ParseError";
    case Errc::internal_inconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::invalid_parameters, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::invalid_parameters, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    mpz_class den(m[2].str());
    if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + s + "'");
    return Rational(mpz_class(m[1].str()), den);
  }
  if (std::regex_match(s, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    const std::string digits = m[2].str() + m[3].str();
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) {
      if (m[4].length() > 6) throw Error(Errc::parse_error, "exponent too large in '" + s + "'");
      exponent += std::stol(m[4].str());
    }
    mpz_class num(digits);
    if (m[1].str() == "-") num = -num;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent >= 0 ? Rational(num * scale, mpz_class(1)) : Rational(num, scale);
  }
  throw Error(Errc::parse_error, "not a rational number: '" + s + "'");
}

BigFloat Rational::to_bigfloat() const {
  BigFloat out;
  mpfr_set_q(out.backend().data(), q_.get_mpq_t(), MPFR_RNDN);
  return out;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = (2 * ::abs(q_.get_num()) * scale + q_.get_den()) / (2 * q_.get_den());
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<size_t>(digits)) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return (sign() < 0 && scaled != 0 ? "-" : "") + body;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) out *= b;
    b *= b;
    exponent >>= 1;
  }
  return out;
}

Rational floor_dyadic(const Rational& x, unsigned bits) {
  mpz_class scaled = x.numerator() << bits;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
  return Rational(q, mpz_class(1) << bits);
}

mpz_class floor(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.mpq().get_num_mpz_t(), x.mpq().get_den_mpz_t());
  return q;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  // Continued-fraction descent for 0 < lo <= hi.
  const mpz_class fl = floor(lo);
  const Rational base(fl, mpz_class(1));
  if (base == lo) return base;
  if (base + Rational(1) <= hi) return base + Rational(1);
  return base + Rational(1) / simplest_between(Rational(1) / (hi - base), Rational(1) / (lo - base));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigFloat to_bigfloat(const Rational& r) { return r.to_bigfloat(); }

}  // namespace hua
