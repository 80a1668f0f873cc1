#pragma once

#include "hua/ratpoly.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace hua {

// All deg(p) complex roots, with multiplicity, by Aberth–Ehrlich iteration in
// 50-digit arithmetic. Each root satisfies |p(ρ)| / Σ|a_i||ρ|^i < tol.
std::vector<std::complex<double>> numeric_roots(const RatPoly& p, double tol = 1e-12);

struct MonteCarloEstimate {
  double estimate = 0;
  double std_error = 0;
  double expected = 0;  // n! / (s+1)_n
  long samples = 0;
};

// Average of (1 - |z|²)^s over the unit ball of C^n, uniform sampling by rejection.
MonteCarloEstimate hua_integral_mc(int n, double s, long samples, std::uint64_t seed);

struct QuadratureResult {
  double value = 0;
  double error = 0;
  int intervals = 0;
};

// Globally adaptive Gauss–Kronrod (7/15) on [lo, hi].
// QuadratureBudgetExceeded if the tolerance is not met within max_intervals.
QuadratureResult adaptive_gauss_kronrod(const std::function<double(double)>& f, double lo, double hi,
                                        double abs_tol, double rel_tol, int max_intervals = 4000);

struct SelbergCheck {
  double quadrature = 0;
  double error_estimate = 0;
  double expected = 0;  // C(a,b,r) / χ_{a,b,r}(s)
  double relative_deviation = 0;
};

// ∫_{[0,1]^r} Π(1-t_j)^s t_j^b Π_{j<k}|t_j - t_k|^a dt for r in {1, 2}.
SelbergCheck selberg_check(int a, int b, int r, double s, double rel_tol = 1e-10);

}  // namespace hua
