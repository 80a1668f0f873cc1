#pragma once

#include "hua/ratpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hua {

struct NamedValue {
  std::string name;
  Rational value;
};

struct StabilityReport {
  bool stable = false;
  std::vector<Rational> hurwitz_minors;  // Δ_1 ... Δ_n where computed
  std::vector<NamedValue> quantities;    // the conditions actually required, in order
  std::optional<int> failed_index;       // index into quantities of the first non-positive one
  bool boundary = false;                 // that quantity is exactly zero
};

// Coefficient in the convention p(z) = a_0 z^n + a_1 z^{n-1} + ... + a_n.
Rational hurwitz_coeff(const RatPoly& p, int i);

// Leading principal minors of the n×n Hurwitz matrix H_{ij} = a_{2j-i}.
std::vector<Rational> hurwitz_minors(const RatPoly& p);

// Routh–Hurwitz: all roots in Re z < 0 iff every Δ_k > 0.
StabilityReport is_stable(const RatPoly& p);

// Liénard–Chipart for degree 4: a_2, a_3, a_4 > 0 and Δ_3 > 0.
StabilityReport lienard_chipart_deg4(const RatPoly& p);

// All roots in Re z < 1/2. Degrees 1-4 use closed-form conditions on the
// coefficients of p itself; higher degrees fall back to the generic path.
StabilityReport roots_left_of_half(const RatPoly& p);
// Shift z -> z + 1/2 and apply Routh–Hurwitz.
StabilityReport roots_left_of_half_generic(const RatPoly& p);

// Δ_2 of the cubic α + βz + γz² + δz³ shifted by 1/2.
template <class T>
T cubic_delta2(const T& alpha, const T& beta, const T& gamma, const T& delta) {
  return (gamma + delta) * (beta + gamma + delta) - alpha * delta;
}

// Δ_3 of the quartic α + βz + γz² + δz³ + εz⁴ shifted by 1/2.
template <class T>
T quartic_delta3(const T& alpha, const T& beta, const T& gamma, const T& delta, const T& eps) {
  const T two_eps_delta = eps + eps + delta;
  return (eps + delta + gamma + beta) * ((eps + delta + gamma) * (eps + delta) - eps * beta) -
         two_eps_delta * two_eps_delta * alpha;
}

struct ClosedHalfPlaneReport {
  bool none_in_open = false;     // no root with Re z > 1/2
  bool root_on_line = false;     // some root with Re z = 1/2
  RatPoly line_factor;           // factor of p(z + 1/2) holding its imaginary-axis roots
  StabilityReport deflated;      // Routh–Hurwitz on the remaining factor
};

// Exact test for roots in the open half-plane Re z > 1/2, robust to roots on the line.
ClosedHalfPlaneReport closed_left_of_half(const RatPoly& p);

}  // namespace hua
