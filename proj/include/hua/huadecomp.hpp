#pragma once

#include "hua/domains.hpp"

#include <vector>

namespace hua {

// Polynomial in μ.
using MuPoly = RatPoly;

// Bivariate polynomial stored as coefficients of a main variable, each a MuPoly.
// For χ(kμ) the main variable is k; for P_μ^m it is η.
using BiPoly = std::vector<MuPoly>;

// (x+1)_n = (x+1)(x+2)...(x+n) as a polynomial in x.
RatPoly rising_factorial_poly(int n);
// (x+1)_n at a rational point.
Rational rising_factorial(const Rational& x, int n);

// χ(kμ) in powers of k.
BiPoly chi_of_k_mu(const DomainSpec& spec);

// C_0(μ) ... C_d(μ) with χ(kμ) = Σ_j μ^j C_{d-j}(μ) (k+1)_j.
std::vector<MuPoly> decompose_chi(const DomainSpec& spec);

// Σ_j μ^j C_{d-j}(μ) (k+1)_j expanded back into powers of k.
BiPoly reconstruct(const std::vector<MuPoly>& C);

// c_j(μ) = j! μ^j C_{d-j}(μ), the coefficients of P_μ^0.
std::vector<MuPoly> c_form(const DomainSpec& spec);

// Polynomial in η whose coefficients are polynomials in μ.
class EtaMuPoly {
 public:
  EtaMuPoly() = default;
  explicit EtaMuPoly(BiPoly eta_coeffs);

  const BiPoly& eta_coefficients() const noexcept { return c_; }
  MuPoly coefficient(int j) const;
  int eta_degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

  // Instantiate μ: a polynomial in η.
  RatPoly at_mu(const Rational& mu) const;
  // Instantiate η: a polynomial in μ.
  MuPoly at_eta(const Rational& eta) const;
  EtaMuPoly derivative_eta(int order) const;

 private:
  BiPoly c_;
};

// P_μ^m(η) = Σ_j (m+1)_j μ^j C_{d-j}(μ) η^j; m = 0 is allowed.
EtaMuPoly representative_polynomial(const DomainSpec& spec, int m);

// q_m(μ) = P_μ^m(1/2).
MuPoly q_poly(const DomainSpec& spec, int m);

// d^k P_μ^m / dη^k at η = 1/2, for 1 <= k <= d (OrderOutOfRange otherwise).
MuPoly derivative_at_half(const DomainSpec& spec, int m, int k);
// The same divided by (m+1)_k μ^k.
MuPoly normalized_derivative_at_half(const DomainSpec& spec, int m, int k);

// q_m(μ) with m symbolic: entry i is the coefficient of μ^i as a polynomial in m.
BiPoly q_coefficients_in_m(const DomainSpec& spec);

// Divides every coefficient by μ^k; throws InternalInconsistency if not divisible.
MuPoly divide_by_mu_power(const MuPoly& p, int k);

}  // namespace hua
