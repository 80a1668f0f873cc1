#pragma once

#include "hua/domains.hpp"
#include "hua/huadecomp.hpp"

#include <complex>
#include <random>
#include <vector>

namespace hua {

using CVec = std::vector<std::complex<double>>;

// Point (z, Z) of the Cartan–Hartogs domain ‖Z‖² < N(z,z)^μ over the base.
struct HartogsPoint {
  CVec z;  // base coordinate, length d
  CVec Z;  // fiber coordinate, length m
};

// Rank one (unit ball) and rank two with b = 0 (Lie ball) are supported.
bool kernel_supported(const DomainSpec& spec);

// ball: 1 - <z,w>;  Lie ball: 1 - 2<z,w> + (z·z) conj(w·w).  UnsupportedType otherwise.
std::complex<double> generic_norm(const DomainSpec& spec, const CVec& z, const CVec& w);

// log N(z,w) on the branch continuous along t -> N(z, t w), t in [0, 1], with log N(z,0) = 0.
// Powers N(z,w)^s are exp(s log N), which can differ from principal powers when Re N(z,w) <= 0.
std::complex<double> generic_norm_log(const DomainSpec& spec, const CVec& z, const CVec& w);

bool in_base_domain(const DomainSpec& spec, const CVec& z);
bool in_hartogs_domain(const DomainSpec& spec, double mu, const HartogsPoint& p);

struct XiEta {
  std::complex<double> xi;
  std::complex<double> eta;
  bool principal_branch_ok = true;  // Re N(z,w) > 0; otherwise the continuous branch differs from the principal one
};

// ξ = <Z,W> / N(z,w)^μ, η = 1/(1-ξ). PointOutsideDomain if either point is outside.
XiEta xi_eta(const DomainSpec& spec, double mu, const HartogsPoint& p, const HartogsPoint& q);

// K((z,Z),(w,W)) / C = N(z,w)^{-g-mμ} η^{m+1} P_μ^m(η), with m = dim Z.
class BergmanKernel {
 public:
  BergmanKernel(const DomainSpec& spec, int m, const Rational& mu);

  std::complex<double> operator()(const HartogsPoint& p, const HartogsPoint& q) const;
  // η^{m+1} P_μ^m(η): the factor that carries the zeros.
  std::complex<double> eta_factor(std::complex<double> eta) const;

  const RatPoly& representative() const noexcept { return poly_; }
  int m() const noexcept { return m_; }
  double mu() const noexcept { return mu_; }

 private:
  DomainSpec spec_;
  int m_;
  double mu_;
  RatPoly poly_;  // P_μ^m in η
};

std::complex<double> bergman_kernel(const DomainSpec& spec, int m, const Rational& mu, const HartogsPoint& p,
                                    const HartogsPoint& q);

// Uniform point of the Hartogs domain: base by rejection from the unit ball,
// fiber uniform in the ball of radius N(z,z)^{μ/2}.
HartogsPoint sample_hartogs_point(const DomainSpec& spec, int m, double mu, std::mt19937_64& rng);

}  // namespace hua
