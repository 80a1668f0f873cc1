#pragma once

#include "hua/huadecomp.hpp"
#include "hua/localization.hpp"
#include "hua/roots.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace hua {

struct Verdict {
  bool is_lu_qikeng = false;
  bool boundary = false;      // q_m(μ) = 0 exactly: η = 1/2 is a root of P_μ^m
  bool root_on_line = false;  // P_μ^m has some root with Re η = 1/2
  int right_halfplane_root_count = -1;
  std::vector<NamedValue> trace;  // quantities evaluated, in order
  std::string method;
};

// Exact decision for rational μ > 0. For dimension <= 4 the threshold criterion
// on q_m is cross-checked against the exact half-plane test.
Verdict decide(const DomainSpec& spec, int m, const Rational& mu);

// A positive root of q_m, or +∞.
struct RootValue {
  bool finite = false;
  Interval iv;        // isolating interval narrowed below the tolerance
  Rational value;     // within tol of the root
  int multiplicity = 0;
  bool exact = false; // value is the root itself
};

struct ThresholdReport {
  RootValue mu_m_1;
  RootValue mu_m_2;
  MuPoly q;
  int positive_root_count = 0;
  std::vector<RootValue> all_roots;
  bool verified_sufficient = false;  // decide() confirmed on both sides of μ_{m,1}
  bool proven = false;               // dimension <= 4 catalog domain
  Rational tol;
};

ThresholdReport threshold(const DomainSpec& spec, int m, const Rational& tol);

struct MOmegaReport {
  int m_omega = 0;
  bool proven = false;  // dimension <= 4 catalog domain
  // q_m(μ) > 0 for every μ > 0 and m >= certificate_from, shown by coefficient signs in (m, μ).
  bool q_positivity_proven = false;
  std::optional<int> certificate_from;
};

MOmegaReport m_omega(const DomainSpec& spec, int window = 8, int cap = 64);

// True when every coefficient of q_m(μ), expanded in μ and in t = m - m0, is >= 0
// and the constant term is > 0.
bool q_positive_for_all_m_from(const DomainSpec& spec, int m0);

struct HalfPlaneCount {
  int count = 0;             // numeric roots with Re η > 1/2 + band
  int ambiguous = 0;         // numeric roots with |Re η - 1/2| <= band
  int real_count = 0;        // exact: distinct real roots in (1/2, ∞)
  bool all_real = false;     // every counted root is one of the real ones
  double max_abs_imag = 0;   // over counted roots
  std::vector<std::complex<double>> roots;
};

// Numeric count of the roots of P_μ^m in Re η > 1/2, validated against exact real-root
// counting and the exact half-plane test. BoundaryMu when q_m(μ) = 0.
HalfPlaneCount halfplane_root_count(const DomainSpec& spec, int m, const Rational& mu, double tol = 1e-9);

// R_m (d = 3) or F_m (d = 4): the Hurwitz determinant built from the coefficients of P_μ^m.
MuPoly hurwitz_condition_poly(const DomainSpec& spec, int m);
// S_m = R_m / ((m+1)_2 μ³) for d = 3, G_m = F_m / ((m+1)(m+1)_3 μ⁶) for d = 4.
MuPoly normalized_hurwitz_condition_poly(const DomainSpec& spec, int m);

// Whether (a, b, r) is one of the catalog domains of dimension <= 4.
bool is_low_dimensional_catalog(const DomainSpec& spec);

}  // namespace hua
