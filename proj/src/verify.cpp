#include "hua/verify.hpp"

#include "hua/error.hpp"
#include "hua/kernel.hpp"
#include "hua/localization.hpp"
#include "hua/luqikeng.hpp"
#include "hua/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace hua {

namespace {

Rational random_rational(std::mt19937_64& rng, long max_num_abs, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(-max_num_abs * q, max_num_abs * q);
  return Rational(num(rng), q);
}

}  // namespace

ConstructedPoly random_constructed_poly(int degree, std::mt19937_64& rng) {
  if (degree < 1) throw Error(Errc::invalid_parameters, "degree must be >= 1");
  ConstructedPoly out;
  std::uniform_int_distribution<int> lead(1, 9);
  std::bernoulli_distribution pair(0.5);
  out.p = RatPoly::constant(Rational(lead(rng), lead(rng)));
  int left = degree;
  while (left > 0) {
    const Rational x = random_rational(rng, 3, 16);
    if (left >= 2 && pair(rng)) {
      Rational y = random_rational(rng, 3, 16).abs();
      if (y.is_zero()) y = Rational(1, 16);
      // (z - x)^2 + y^2
      out.p *= RatPoly({x * x + y * y, Rational(-2) * x, Rational(1)});
      out.roots.emplace_back(x.to_double(), y.to_double());
      out.roots.emplace_back(x.to_double(), -y.to_double());
      left -= 2;
    } else {
      out.p *= RatPoly::linear_root(x);
      out.roots.emplace_back(x.to_double(), 0.0);
      left -= 1;
    }
  }
  out.min_distance_to_line = 1e300;
  out.left_of_half = true;
  for (const auto& r : out.roots) {
    out.min_distance_to_line = std::min(out.min_distance_to_line, std::abs(r.real() - 0.5));
    out.left_of_half = out.left_of_half && r.real() < 0.5;
  }
  return out;
}

LocalizationSweep localization_vs_oracle(int cases, std::uint64_t seed, int max_degree, double exclusion) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(1, max_degree);
  LocalizationSweep out;
  while (out.cases < cases) {
    const ConstructedPoly c = random_constructed_poly(deg(rng), rng);
    if (c.min_distance_to_line < exclusion) {
      ++out.skipped;
      continue;
    }
    ++out.cases;
    const bool exact = roots_left_of_half(c.p).stable;
    const auto roots = numeric_roots(c.p);
    const bool numeric = std::all_of(roots.begin(), roots.end(), [](const auto& r) { return r.real() < 0.5; });
    if (exact == numeric) ++out.oracle_agreements;
    if (exact == c.left_of_half) ++out.construction_agreements;
    if (exact == roots_left_of_half_generic(c.p).stable) ++out.generic_agreements;
  }
  return out;
}

RangeLemmaSweep range_lemma(const DomainSpec& spec, int m, double mu, long pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RangeLemmaSweep out;
  for (long i = 0; i < pairs; ++i) {
    const HartogsPoint p = sample_hartogs_point(spec, m, mu, rng);
    const HartogsPoint q = sample_hartogs_point(spec, m, mu, rng);
    const XiEta xe = xi_eta(spec, mu, p, q);
    ++out.pairs;
    const double axi = std::abs(xe.xi);
    out.max_abs_xi = std::max(out.max_abs_xi, axi);
    out.min_re_eta = std::min(out.min_re_eta, xe.eta.real());
    if (!(axi < 1)) ++out.xi_violations;
    if (!(xe.eta.real() > 0.5)) ++out.eta_violations;
    if (!xe.principal_branch_ok) ++out.branch_warnings;
  }
  return out;
}

DecideSweep decide_vs_numeric(int per_side, int max_m, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  DecideSweep out;
  const Rational refine_tol(1, 1000000000000L);
  for (const char* name : {"I_{1,2}", "I_{1,3}", "IV_3", "I_{1,4}", "IV_4"}) {
    const DomainSpec spec = catalog_lookup(name);
    for (int m = 1; m <= max_m; ++m) {
      const ThresholdReport rep = threshold(spec, m, refine_tol);
      std::vector<double> cuts{0.0};
      for (const auto& r : rep.all_roots) cuts.push_back(r.value.to_double());
      cuts.push_back(cuts.back() + (rep.all_roots.empty() ? 20.0 : 5.0));
      for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        for (int s = 0; s < per_side; ++s) {
          const double x = cuts[k] + (cuts[k + 1] - cuts[k]) * unit(rng);
          const Rational mu(static_cast<long>(std::llround(x * 1e6)), 1000000L);
          if (mu.sign() <= 0) continue;
          ++out.samples;
          const bool lq = decide(spec, m, mu).is_lu_qikeng;
          int count = 0;
          try {
            count = halfplane_root_count(spec, m, mu, tol).count;
          } catch (const Error& e) {
            if (e.code() != Errc::boundary_mu) throw;
            count = 0;
          }
          if (lq == (count == 0)) {
            ++out.agreements;
            continue;
          }
          double dist = 1e300;
          for (size_t j = 1; j + 1 < cuts.size(); ++j) dist = std::min(dist, std::abs(mu.to_double() - cuts[j]));
          if (dist < tol) {
            ++out.near_threshold;
          } else {
            out.failures.push_back(std::string(name) + " m=" + std::to_string(m) + " mu=" + mu.str());
          }
        }
      }
    }
  }
  return out;
}

}  // namespace hua
