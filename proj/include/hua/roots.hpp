#pragma once

#include "hua/ratpoly.hpp"

#include <vector>

namespace hua {

// Half-open interval (lo, hi]; as an isolating interval it holds exactly one real root.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& x) const { return lo < x && x <= hi; }
};

class SturmSequence {
 public:
  // p must be square-free (NonSquareFree otherwise).
  explicit SturmSequence(const RatPoly& p);

  int variations_at(const Rational& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  // Distinct real roots in (lo, hi].
  int count(const Interval& iv) const { return variations_at(iv.lo) - variations_at(iv.hi); }
  // Distinct real roots in (x, +inf).
  int count_above(const Rational& x) const { return variations_at(x) - variations_at_pos_inf(); }
  int count_real() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

  const std::vector<RatPoly>& chain() const noexcept { return chain_; }

 private:
  std::vector<RatPoly> chain_;
};

int sturm_count(const RatPoly& p, const Interval& iv);

struct IsolatedRoot {
  Interval iv;
  int multiplicity = 1;
};

// Isolating intervals for the distinct positive real roots of p, ascending.
std::vector<IsolatedRoot> isolate_positive_roots(const RatPoly& p);
// Same for all real roots.
std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& p);

// 1 + max |a_i / a_n|; every complex root has modulus below it.
Rational cauchy_bound(const RatPoly& p);

enum class RefineMethod { bisection, newton };

// Rational within tol of the unique root of p in iv, lying in iv.
// Exact roots met along the way are returned as is.
Rational refine_root(const RatPoly& p, const Interval& iv, const Rational& tol,
                     RefineMethod method = RefineMethod::bisection);
// Shrinks iv around its root until the width is below tol; returns the narrowed interval.
Interval narrow_interval(const RatPoly& p, const Interval& iv, const Rational& tol,
                         RefineMethod method = RefineMethod::bisection);

}  // namespace hua
