#pragma once

#include "hua/domains.hpp"
#include "hua/ratpoly.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hua {

// Polynomial assembled from prescribed roots, so its localization is known in advance.
struct ConstructedPoly {
  RatPoly p;
  std::vector<std::complex<double>> roots;  // with multiplicity
  double min_distance_to_line = 0;          // min |Re ρ - 1/2|
  bool left_of_half = false;                // every Re ρ < 1/2
};

// Random real roots and conjugate pairs with rational coordinates in [-3, 3],
// times a random positive leading coefficient.
ConstructedPoly random_constructed_poly(int degree, std::mt19937_64& rng);

struct LocalizationSweep {
  int cases = 0;
  int skipped = 0;                 // built too close to Re = 1/2
  int oracle_agreements = 0;       // roots_left_of_half vs numeric roots
  int construction_agreements = 0; // roots_left_of_half vs the prescribed roots
  int generic_agreements = 0;      // closed-form path vs shifted Routh–Hurwitz
};

LocalizationSweep localization_vs_oracle(int cases, std::uint64_t seed, int max_degree = 6,
                                         double exclusion = 1e-3);

struct RangeLemmaSweep {
  long pairs = 0;
  long xi_violations = 0;   // |ξ| >= 1
  long eta_violations = 0;  // Re η <= 1/2
  long branch_warnings = 0; // Re N(z,w) <= 0
  double max_abs_xi = 0;
  double min_re_eta = 1e300;
};

RangeLemmaSweep range_lemma(const DomainSpec& spec, int m, double mu, long pairs, std::uint64_t seed);

struct DecideSweep {
  int samples = 0;
  int agreements = 0;
  int near_threshold = 0;  // disagreements within tol of a threshold (allowed)
  std::vector<std::string> failures;
};

// For each base of dimension <= 4 and m in [1, max_m], draws μ on both sides of every
// positive root of q_m and compares decide() with the numeric half-plane count.
DecideSweep decide_vs_numeric(int per_side, int max_m, std::uint64_t seed, double tol = 1e-9);

}  // namespace hua
