#include "hua/kernel.hpp"

#include "hua/error.hpp"

#include <cmath>

namespace hua {

namespace {

std::complex<double> hermitian(const CVec& z, const CVec& w) {
  std::complex<double> s = 0;
  for (size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
  return s;
}

std::complex<double> bilinear(const CVec& z, const CVec& w) {
  std::complex<double> s = 0;
  for (size_t i = 0; i < z.size(); ++i) s += z[i] * w[i];
  return s;
}

double norm_sq(const CVec& z) { return hermitian(z, z).real(); }

bool is_ball(const DomainSpec& s) { return s.r == 1; }
bool is_lie_ball(const DomainSpec& s) { return s.r == 2 && s.b == 0; }

void require_supported(const DomainSpec& spec) {
  if (!kernel_supported(spec)) {
    throw Error(Errc::unsupported_type, "generic norm is implemented for the unit ball and the Lie ball only");
  }
}

void require_dimension(const DomainSpec& spec, const CVec& z) {
  if (static_cast<int>(z.size()) != spec.d) {
    throw Error(Errc::invalid_parameters, "base point must have " + std::to_string(spec.d) + " coordinates");
  }
}

// Uniform point in the Euclidean ball of C^n with the given radius.
CVec uniform_ball(int n, double radius, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CVec v(static_cast<size_t>(n));
  double len = 0;
  do {
    len = 0;
    for (auto& x : v) {
      x = {gauss(rng), gauss(rng)};
      len += std::norm(x);
    }
  } while (len == 0);
  const double scale = radius * std::pow(unit(rng), 1.0 / (2.0 * n)) / std::sqrt(len);
  for (auto& x : v) x *= scale;
  return v;
}

}  // namespace

bool kernel_supported(const DomainSpec& spec) { return is_ball(spec) || is_lie_ball(spec); }

std::complex<double> generic_norm(const DomainSpec& spec, const CVec& z, const CVec& w) {
  require_supported(spec);
  require_dimension(spec, z);
  require_dimension(spec, w);
  if (is_ball(spec)) return 1.0 - hermitian(z, w);
  return 1.0 - 2.0 * hermitian(z, w) + bilinear(z, z) * std::conj(bilinear(w, w));
}

std::complex<double> generic_norm_log(const DomainSpec& spec, const CVec& z, const CVec& w) {
  require_supported(spec);
  require_dimension(spec, z);
  require_dimension(spec, w);
  if (is_ball(spec)) return std::log(1.0 - hermitian(z, w));
  // N(z, t w) = (1 - r1 t)(1 - r2 t); neither factor meets the negative axis for t in [0, 1]
  // because N(z, t w) has no zero there, so the principal logs of the factors add up continuously.
  const std::complex<double> sum = 2.0 * hermitian(z, w);
  const std::complex<double> prod = bilinear(z, z) * std::conj(bilinear(w, w));
  const std::complex<double> root = std::sqrt(sum * sum - 4.0 * prod);
  const std::complex<double> r1 = 0.5 * (sum + (std::abs(sum + root) >= std::abs(sum - root) ? root : -root));
  const std::complex<double> r2 = r1 == 0.0 ? std::complex<double>(0) : prod / r1;
  return std::log(1.0 - r1) + std::log(1.0 - r2);
}

bool in_base_domain(const DomainSpec& spec, const CVec& z) {
  require_supported(spec);
  require_dimension(spec, z);
  const double n2 = norm_sq(z);
  if (is_ball(spec)) return n2 < 1;
  const double disc = n2 * n2 - std::norm(bilinear(z, z));
  return n2 + std::sqrt(std::max(0.0, disc)) < 1;
}

bool in_hartogs_domain(const DomainSpec& spec, double mu, const HartogsPoint& p) {
  if (!in_base_domain(spec, p.z)) return false;
  const double n = generic_norm(spec, p.z, p.z).real();
  return n > 0 && norm_sq(p.Z) < std::pow(n, mu);
}

XiEta xi_eta(const DomainSpec& spec, double mu, const HartogsPoint& p, const HartogsPoint& q) {
  if (!in_hartogs_domain(spec, mu, p) || !in_hartogs_domain(spec, mu, q)) {
    throw Error(Errc::point_outside_domain, "point outside the Cartan-Hartogs domain");
  }
  if (p.Z.size() != q.Z.size()) throw Error(Errc::invalid_parameters, "fiber dimensions differ");
  XiEta out;
  out.principal_branch_ok = generic_norm(spec, p.z, q.z).real() > 0;
  out.xi = hermitian(p.Z, q.Z) * std::exp(-mu * generic_norm_log(spec, p.z, q.z));
  out.eta = 1.0 / (1.0 - out.xi);
  return out;
}

BergmanKernel::BergmanKernel(const DomainSpec& spec, int m, const Rational& mu)
    : spec_(spec), m_(m), mu_(mu.to_double()) {
  require_supported(spec);
  if (m < 1) throw Error(Errc::invalid_parameters, "fiber dimension must be >= 1");
  if (mu.sign() <= 0) throw Error(Errc::mu_not_positive, "mu must be positive");
  poly_ = representative_polynomial(spec, m).at_mu(mu);
}

std::complex<double> BergmanKernel::eta_factor(std::complex<double> eta) const {
  return std::pow(eta, m_ + 1) * poly_(eta);
}

std::complex<double> BergmanKernel::operator()(const HartogsPoint& p, const HartogsPoint& q) const {
  if (static_cast<int>(p.Z.size()) != m_ || static_cast<int>(q.Z.size()) != m_) {
    throw Error(Errc::invalid_parameters, "fiber coordinate must have m entries");
  }
  const XiEta xe = xi_eta(spec_, mu_, p, q);
  const std::complex<double> log_n = generic_norm_log(spec_, p.z, q.z);
  return std::exp(-(spec_.genus + m_ * mu_) * log_n) * eta_factor(xe.eta);
}

std::complex<double> bergman_kernel(const DomainSpec& spec, int m, const Rational& mu, const HartogsPoint& p,
                                    const HartogsPoint& q) {
  return BergmanKernel(spec, m, mu)(p, q);
}

HartogsPoint sample_hartogs_point(const DomainSpec& spec, int m, double mu, std::mt19937_64& rng) {
  require_supported(spec);
  HartogsPoint p;
  do {
    p.z = uniform_ball(spec.d, 1.0, rng);
  } while (!in_base_domain(spec, p.z));
  const double n = generic_norm(spec, p.z, p.z).real();
  // Rounding can land a draw on the boundary sphere; redraw in that case.
  do {
    p.Z = uniform_ball(m, std::pow(n, mu / 2), rng);
  } while (!in_hartogs_domain(spec, mu, p));
  return p;
}

}  // namespace hua
