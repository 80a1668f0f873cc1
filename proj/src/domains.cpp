#include "hua/domains.hpp"

#include "hua/error.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <regex>

namespace hua {

int dimension(int a, int b, int r) { return r + r * (r - 1) * a / 2 + r * b; }

int genus(int a, int b, int r) { return 2 + a * (r - 1) + b; }

std::string DomainSpec::name() const {
  if (!label.empty()) return label;
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(r) + ")";
}

DomainSpec make_spec(int a, int b, int r, std::string label) {
  if (a < 0 || b < 0 || r < 1) {
    throw Error(Errc::invalid_parameters, "need a >= 0, b >= 0, r >= 1");
  }
  DomainSpec s;
  s.a = a;
  s.b = b;
  s.r = r;
  s.d = dimension(a, b, r);
  s.genus = genus(a, b, r);
  s.label = std::move(label);
  return s;
}

namespace {

DomainSpec checked(int a, int b, int r, int expected_dim, const std::string& label) {
  DomainSpec s = make_spec(a, b, r, label);
  if (s.d != expected_dim) {
    throw Error(Errc::internal_inconsistency, "catalog invariants of " + label + " give the wrong dimension");
  }
  return s;
}

std::string indexed(const std::string& family, int n) { return family + "_" + std::to_string(n); }

}  // namespace

DomainSpec catalog_lookup(const std::string& name) {
  static const std::regex type_i(R"(^I_\{?(\d+),(\d+)\}?$)");
  static const std::regex single(R"(^(II|III|IV)_\{?(\d+)\}?$)");
  std::smatch m;
  if (std::regex_match(name, m, type_i)) {
    const int p = std::stoi(m[1].str());
    const int q = std::stoi(m[2].str());
    if (p < 1 || p > q) throw Error(Errc::invalid_parameters, "I_{p,q} needs 1 <= p <= q");
    return checked(2, q - p, p, p * q, "I_{" + std::to_string(p) + "," + std::to_string(q) + "}");
  }
  if (std::regex_match(name, m, single)) {
    if (m[2].length() > 6) throw Error(Errc::invalid_parameters, "index too large");
    const std::string family = m[1].str();
    const int n = std::stoi(m[2].str());
    if (family == "II") {
      if (n < 2) throw Error(Errc::invalid_parameters, "II_n needs n >= 2");
      return checked(4, 2 * (n % 2), n / 2, n * (n - 1) / 2, indexed(family, n));
    }
    if (family == "III") {
      if (n < 1) throw Error(Errc::invalid_parameters, "III_n needs n >= 1");
      return checked(1, 0, n, n * (n + 1) / 2, indexed(family, n));
    }
    if (n < 3) throw Error(Errc::invalid_parameters, "IV_n needs n >= 3");
    return checked(n - 2, 0, 2, n, indexed(family, n));
  }
  if (name == "EV") return checked(6, 4, 2, 16, "EV");
  if (name == "EVI") return checked(8, 0, 3, 27, "EVI");
  throw Error(Errc::unknown_type, "unknown domain type '" + name + "'");
}

std::vector<DomainSpec> catalog_enumerate(int max_dim) {
  std::vector<DomainSpec> out;
  for (int p = 1; p <= max_dim; ++p) {
    for (int q = p; p * q <= max_dim; ++q) {
      out.push_back(catalog_lookup("I_{" + std::to_string(p) + "," + std::to_string(q) + "}"));
    }
  }
  for (int n = 2; n * (n - 1) / 2 <= max_dim; ++n) out.push_back(catalog_lookup(indexed("II", n)));
  for (int n = 1; n * (n + 1) / 2 <= max_dim; ++n) out.push_back(catalog_lookup(indexed("III", n)));
  for (int n = 3; n <= max_dim; ++n) out.push_back(catalog_lookup(indexed("IV", n)));
  if (16 <= max_dim) out.push_back(catalog_lookup("EV"));
  if (27 <= max_dim) out.push_back(catalog_lookup("EVI"));
  return out;
}

std::vector<LinearFactor> hua_linear_factors(const DomainSpec& spec) {
  std::map<Rational, int> powers;
  for (int j = 1; j <= spec.r; ++j) {
    const Rational base = Rational((j - 1) * spec.a, 2);
    const int len = 1 + spec.b + (spec.r - j) * spec.a;
    for (int i = 1; i <= len; ++i) ++powers[base + Rational(i)];
  }
  std::vector<LinearFactor> out;
  for (const auto& [shift, power] : powers) out.push_back({shift, power});
  return out;
}

RatPoly hua_polynomial(const DomainSpec& spec) {
  RatPoly chi = RatPoly::constant(1);
  for (const auto& f : hua_linear_factors(spec)) chi *= pow(RatPoly({f.shift, Rational(1)}), f.power);
  return chi;
}

std::string hua_factored(const DomainSpec& spec) {
  const auto factors = hua_linear_factors(spec);
  if (factors.size() == 1 && factors[0].power == 1) return "s+" + factors[0].shift.str();
  std::string out;
  for (const auto& f : factors) {
    out += "(s+" + f.shift.str() + ")";
    if (f.power > 1) out += "^" + std::to_string(f.power);
  }
  return out;
}

BigFloat selberg_constant(int a, int b, int r) {
  const BigFloat half_a = BigFloat(a) / 2;
  BigFloat out = 1;
  for (int j = 1; j <= r; ++j) {
    const BigFloat x = BigFloat(b + 1) + (j - 1) * half_a;
    const BigFloat y = j * half_a + 1;
    const BigFloat z = half_a + 1;
    out *= boost::multiprecision::tgamma(x) * boost::multiprecision::tgamma(y) / boost::multiprecision::tgamma(z);
  }
  return out;
}

}  // namespace hua
