#include "hua/huadecomp.hpp"

#include "hua/error.hpp"

namespace hua {

RatPoly rising_factorial_poly(int n) {
  RatPoly out = RatPoly::constant(1);
  for (int i = 1; i <= n; ++i) out *= RatPoly({Rational(i), Rational(1)});
  return out;
}

Rational rising_factorial(const Rational& x, int n) {
  Rational out(1);
  for (int i = 1; i <= n; ++i) out *= x + Rational(i);
  return out;
}

MuPoly divide_by_mu_power(const MuPoly& p, int k) {
  const auto& c = p.coeffs();
  for (int i = 0; i < k && i < static_cast<int>(c.size()); ++i) {
    if (!c[static_cast<size_t>(i)].is_zero()) {
      throw Error(Errc::internal_inconsistency, "polynomial not divisible by mu^" + std::to_string(k));
    }
  }
  if (static_cast<int>(c.size()) <= k) return {};
  return MuPoly(std::vector<Rational>(c.begin() + k, c.end()));
}

BiPoly chi_of_k_mu(const DomainSpec& spec) {
  const RatPoly chi = hua_polynomial(spec);
  BiPoly out(static_cast<size_t>(chi.degree()) + 1);
  for (int i = 0; i <= chi.degree(); ++i) out[static_cast<size_t>(i)] = MuPoly::monomial(chi.coeff(i), i);
  return out;
}

std::vector<MuPoly> decompose_chi(const DomainSpec& spec) {
  BiPoly rest = chi_of_k_mu(spec);
  const int d = static_cast<int>(rest.size()) - 1;
  std::vector<MuPoly> C(static_cast<size_t>(d) + 1);
  // (k+1)_j is monic of degree j in k, so the basis change is unitriangular.
  for (int j = d; j >= 0; --j) {
    const MuPoly B = rest[static_cast<size_t>(j)];
    const RatPoly basis = rising_factorial_poly(j);
    for (int i = 0; i <= j; ++i) rest[static_cast<size_t>(i)] -= B * basis.coeff(i);
    C[static_cast<size_t>(d - j)] = divide_by_mu_power(B, j);
  }
  for (const auto& r : rest) {
    if (!r.is_zero()) throw Error(Errc::internal_inconsistency, "rising-factorial basis change left a remainder");
  }
  return C;
}

BiPoly reconstruct(const std::vector<MuPoly>& C) {
  const int d = static_cast<int>(C.size()) - 1;
  BiPoly out(C.size());
  for (int j = 0; j <= d; ++j) {
    const MuPoly coeff = MuPoly::monomial(1, j) * C[static_cast<size_t>(d - j)];
    const RatPoly basis = rising_factorial_poly(j);
    for (int i = 0; i <= j; ++i) out[static_cast<size_t>(i)] += coeff * basis.coeff(i);
  }
  return out;
}

std::vector<MuPoly> c_form(const DomainSpec& spec) {
  const auto C = decompose_chi(spec);
  const int d = static_cast<int>(C.size()) - 1;
  std::vector<MuPoly> out(C.size());
  Rational fact(1);
  for (int j = 0; j <= d; ++j) {
    if (j > 0) fact *= Rational(j);
    out[static_cast<size_t>(j)] = MuPoly::monomial(fact, j) * C[static_cast<size_t>(d - j)];
  }
  return out;
}

EtaMuPoly::EtaMuPoly(BiPoly eta_coeffs) : c_(std::move(eta_coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

MuPoly EtaMuPoly::coefficient(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<size_t>(j)];
}

RatPoly EtaMuPoly::at_mu(const Rational& mu) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c(mu));
  return RatPoly(std::move(v));
}

MuPoly EtaMuPoly::at_eta(const Rational& eta) const {
  MuPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * eta + *it;
  return acc;
}

EtaMuPoly EtaMuPoly::derivative_eta(int order) const {
  BiPoly out;
  for (int j = order; j < static_cast<int>(c_.size()); ++j) {
    Rational falling(1);
    for (int i = 0; i < order; ++i) falling *= Rational(j - i);
    out.push_back(c_[static_cast<size_t>(j)] * falling);
  }
  return EtaMuPoly(std::move(out));
}

EtaMuPoly representative_polynomial(const DomainSpec& spec, int m) {
  if (m < 0) throw Error(Errc::invalid_parameters, "m must be nonnegative");
  const auto C = decompose_chi(spec);
  const int d = static_cast<int>(C.size()) - 1;
  BiPoly out(C.size());
  for (int j = 0; j <= d; ++j) {
    out[static_cast<size_t>(j)] =
        MuPoly::monomial(rising_factorial(Rational(m), j), j) * C[static_cast<size_t>(d - j)];
  }
  return EtaMuPoly(std::move(out));
}

MuPoly q_poly(const DomainSpec& spec, int m) {
  return representative_polynomial(spec, m).at_eta(Rational(1, 2));
}

MuPoly derivative_at_half(const DomainSpec& spec, int m, int k) {
  if (k < 1 || k > spec.d) {
    throw Error(Errc::order_out_of_range, "derivative order must lie in [1, " + std::to_string(spec.d) + "]");
  }
  return representative_polynomial(spec, m).derivative_eta(k).at_eta(Rational(1, 2));
}

MuPoly normalized_derivative_at_half(const DomainSpec& spec, int m, int k) {
  const MuPoly raw = derivative_at_half(spec, m, k);
  return divide_by_mu_power(raw, k) * (Rational(1) / rising_factorial(Rational(m), k));
}

BiPoly q_coefficients_in_m(const DomainSpec& spec) {
  const auto C = decompose_chi(spec);
  const int d = static_cast<int>(C.size()) - 1;
  BiPoly out(static_cast<size_t>(d) + 1);
  Rational half_pow(1);
  for (int j = 0; j <= d; ++j) {
    const RatPoly in_m = rising_factorial_poly(j) * half_pow;
    const MuPoly& c = C[static_cast<size_t>(d - j)];
    for (int i = 0; i <= c.degree(); ++i) out[static_cast<size_t>(i + j)] += in_m * c.coeff(i);
    half_pow /= Rational(2);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

}  // namespace hua
