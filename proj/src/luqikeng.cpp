#include "hua/luqikeng.hpp"

#include "hua/error.hpp"
#include "hua/oracle.hpp"

#include <cmath>

namespace hua {

namespace {

void require_m(int m) {
  if (m < 1) throw Error(Errc::invalid_parameters, "fiber dimension m must be >= 1");
}

// Distinct positive roots of q in (0, mu], not counting mu itself.
int roots_strictly_below(const MuPoly& q, const Rational& mu) {
  const RatPoly sf = square_free_part(q);
  int n = SturmSequence(sf).count({Rational(0), mu});
  if (q(mu).is_zero()) --n;
  return n;
}

std::string verdict_word(bool lq) { return lq ? "1" : "0"; }

}  // namespace

bool is_low_dimensional_catalog(const DomainSpec& spec) {
  if (spec.d > 4) return false;
  for (const auto& c : catalog_enumerate(4)) {
    if (c == spec) return true;
  }
  return false;
}

Verdict decide(const DomainSpec& spec, int m, const Rational& mu) {
  require_m(m);
  if (mu.sign() <= 0) throw Error(Errc::mu_not_positive, "mu must be positive");

  const EtaMuPoly rep = representative_polynomial(spec, m);
  const RatPoly p = rep.at_mu(mu);
  Verdict v;
  const Rational q_at_mu = p(Rational(1, 2));
  v.boundary = q_at_mu.is_zero();

  const ClosedHalfPlaneReport exact = closed_left_of_half(p);
  v.is_lu_qikeng = exact.none_in_open;
  v.root_on_line = exact.root_on_line;

  if (spec.d <= 4) {
    const StabilityReport chain = roots_left_of_half(p);
    v.trace = chain.quantities;
    const int below = roots_strictly_below(q_poly(spec, m), mu);
    const bool by_threshold = below == 0;
    v.trace.push_back({"q_m roots in (0, mu)", Rational(below)});
    v.method = "threshold on q_m (Sturm) + closed half-plane test";

    // A strictly stable chain rules out roots on the line, and an unstable chain
    // with nothing on the line leaves a root in the open half-plane.
    const bool chain_consistent =
        chain.stable ? exact.none_in_open && !exact.root_on_line : exact.root_on_line || !exact.none_in_open;
    if (!chain_consistent) {
      throw Error(Errc::internal_inconsistency, "criterion chain disagrees with the exact half-plane test");
    }
    if (is_low_dimensional_catalog(spec) && by_threshold != exact.none_in_open) {
      throw Error(Errc::internal_inconsistency,
                  "threshold verdict " + verdict_word(by_threshold) + " disagrees with exact test for " + spec.name());
    }
  } else {
    v.trace.push_back({"q_m(mu)", q_at_mu});
    v.method = "shift + Routh-Hurwitz with imaginary-axis deflation";
  }
  v.trace.push_back({"line factor degree", Rational(exact.line_factor.degree())});
  for (const auto& nv : exact.deflated.quantities) v.trace.push_back({"deflated " + nv.name, nv.value});
  return v;
}

namespace {

RootValue refine(const MuPoly& q, const IsolatedRoot& r, const Rational& tol) {
  RootValue out;
  out.finite = true;
  out.multiplicity = r.multiplicity;
  out.iv = narrow_interval(q, r.iv, tol);
  if (q(out.iv.hi).is_zero()) {
    out.value = out.iv.hi;
    out.exact = true;
  } else {
    out.value = out.iv.midpoint();
  }
  return out;
}

// A rational just past the root, with no further root of q in between.
Rational probe_above(const MuPoly& q, const RootValue& root, const Rational& tol) {
  const Rational x = root.iv.hi;
  if (!q(x).is_zero()) return x;
  const RatPoly sf = square_free_part(q);
  const SturmSequence s(sf);
  Rational step = tol;
  while (true) {
    const Rational y = x + step;
    if (s.count({x, y}) == 0) return y;
    step /= Rational(2);
  }
}

// A positive rational below the smallest positive root.
Rational probe_below(const MuPoly& q, const RootValue& root) {
  if (root.iv.lo.sign() > 0) return root.iv.lo;
  const SturmSequence s(square_free_part(q));
  Rational y = root.iv.hi / Rational(2);
  while (s.count({Rational(0), y}) != 0) y /= Rational(2);
  return y;
}

}  // namespace

ThresholdReport threshold(const DomainSpec& spec, int m, const Rational& tol) {
  require_m(m);
  if (tol.sign() <= 0) throw Error(Errc::tolerance_not_positive, "tolerance must be positive");
  ThresholdReport rep;
  rep.tol = tol;
  rep.q = q_poly(spec, m);
  for (const auto& r : isolate_positive_roots(rep.q)) rep.all_roots.push_back(refine(rep.q, r, tol));
  rep.positive_root_count = static_cast<int>(rep.all_roots.size());
  if (!rep.all_roots.empty()) rep.mu_m_1 = rep.all_roots[0];
  if (rep.all_roots.size() > 1) rep.mu_m_2 = rep.all_roots[1];
  rep.proven = is_low_dimensional_catalog(spec);

  if (rep.mu_m_1.finite) {
    const Rational below = probe_below(rep.q, rep.mu_m_1);
    const Rational above = probe_above(rep.q, rep.mu_m_1, tol);
    rep.verified_sufficient = decide(spec, m, below).is_lu_qikeng && !decide(spec, m, above).is_lu_qikeng;
    if (rep.mu_m_1.exact) {
      const Verdict at = decide(spec, m, rep.mu_m_1.value);
      rep.verified_sufficient = rep.verified_sufficient && at.is_lu_qikeng && at.boundary;
    }
  } else {
    rep.verified_sufficient = true;
    for (const Rational& mu : {Rational(1, 10), Rational(1), Rational(10), Rational(100), Rational(1000)}) {
      rep.verified_sufficient = rep.verified_sufficient && decide(spec, m, mu).is_lu_qikeng;
    }
  }
  return rep;
}

bool q_positive_for_all_m_from(const DomainSpec& spec, int m0) {
  const BiPoly coeffs = q_coefficients_in_m(spec);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    const RatPoly in_t = coeffs[i].compose_affine(1, Rational(m0));
    for (const auto& c : in_t.coeffs()) {
      if (c.sign() < 0) return false;
    }
    if (i == 0 && in_t.coeff(0).sign() <= 0) return false;
  }
  return true;
}

MOmegaReport m_omega(const DomainSpec& spec, int window, int cap) {
  if (window < 0 || cap < 1) throw Error(Errc::invalid_parameters, "window must be >= 0 and cap >= 1");
  std::vector<int> has_root(static_cast<size_t>(cap + window) + 1, -1);
  auto rooted = [&](int m) {
    int& slot = has_root[static_cast<size_t>(m)];
    if (slot < 0) slot = isolate_positive_roots(q_poly(spec, m)).empty() ? 0 : 1;
    return slot == 1;
  };

  MOmegaReport rep;
  for (int m = 1; m <= cap && rep.m_omega == 0; ++m) {
    bool clear = true;
    for (int k = m; k <= m + window && clear; ++k) clear = !rooted(k);
    if (clear) rep.m_omega = m;
  }
  if (rep.m_omega == 0) {
    throw Error(Errc::search_limit_exceeded, "no m <= " + std::to_string(cap) + " clears the search window");
  }
  rep.proven = is_low_dimensional_catalog(spec);
  for (int m0 = rep.m_omega; m0 <= cap; ++m0) {
    if (q_positive_for_all_m_from(spec, m0)) {
      rep.certificate_from = m0;
      break;
    }
  }
  rep.q_positivity_proven = rep.certificate_from && *rep.certificate_from <= rep.m_omega + window;
  return rep;
}

HalfPlaneCount halfplane_root_count(const DomainSpec& spec, int m, const Rational& mu, double tol) {
  require_m(m);
  if (mu.sign() <= 0) throw Error(Errc::mu_not_positive, "mu must be positive");
  if (!(tol > 0)) throw Error(Errc::tolerance_not_positive, "tolerance must be positive");
  const RatPoly p = representative_polynomial(spec, m).at_mu(mu);
  if (p(Rational(1, 2)).is_zero()) {
    throw Error(Errc::boundary_mu, "mu is a root of q_m; eta = 1/2 is a root of the representative polynomial");
  }

  HalfPlaneCount out;
  out.roots = numeric_roots(p, std::min(tol, 1e-12));
  const double band = 10 * tol;
  for (const auto& r : out.roots) {
    const double offset = r.real() - 0.5;
    if (std::abs(offset) <= band) {
      ++out.ambiguous;
    } else if (offset > 0) {
      ++out.count;
      out.max_abs_imag = std::max(out.max_abs_imag, std::abs(r.imag()));
    }
  }

  const auto factors = square_free_decomposition(p);
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    out.real_count += static_cast<int>(i + 1) * SturmSequence(factors[i]).count_above(Rational(1, 2));
  }
  out.all_real = out.count == out.real_count;

  if (out.ambiguous == 0) {
    const bool none = closed_left_of_half(p).none_in_open;
    if (none != (out.count == 0)) {
      throw Error(Errc::oracle_non_convergence, "numeric root count contradicts the exact half-plane test");
    }
  }
  return out;
}

MuPoly hurwitz_condition_poly(const DomainSpec& spec, int m) {
  const EtaMuPoly rep = representative_polynomial(spec, m);
  auto c = [&](int j) { return rep.coefficient(j); };
  if (spec.d == 3) return cubic_delta2(c(0), c(1), c(2), c(3));
  if (spec.d == 4) return quartic_delta3(c(0), c(1), c(2), c(3), c(4));
  throw Error(Errc::wrong_degree, "Hurwitz condition polynomial is defined for dimension 3 and 4");
}

MuPoly normalized_hurwitz_condition_poly(const DomainSpec& spec, int m) {
  const MuPoly raw = hurwitz_condition_poly(spec, m);
  const Rational mm(m);
  if (spec.d == 3) return divide_by_mu_power(raw, 3) * (Rational(1) / rising_factorial(mm, 2));
  return divide_by_mu_power(raw, 6) * (Rational(1) / ((mm + Rational(1)) * rising_factorial(mm, 3)));
}

}  // namespace hua
