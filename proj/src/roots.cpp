#include "hua/roots.hpp"

#include "hua/error.hpp"

#include <algorithm>
#include <optional>

namespace hua {

namespace {

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

unsigned bits_for(const Rational& tol) {
  // Smallest k with 2^-k <= tol, plus guard bits.
  unsigned k = 0;
  Rational step(1);
  while (step > tol) {
    step /= Rational(2);
    ++k;
  }
  return k + 4;
}

}  // namespace

SturmSequence::SturmSequence(const RatPoly& p) {
  if (p.is_zero()) throw Error(Errc::invalid_parameters, "Sturm sequence of the zero polynomial");
  if (!is_square_free(p)) throw Error(Errc::non_square_free, "polynomial has a repeated factor");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative());
  while (chain_.back().degree() > 0) {
    RatPoly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and bounds coefficient growth.
    const Rational scale = Rational(1) / r.leading().abs();
    chain_.push_back(-(r * scale));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(q.sign_at(x));
  return sign_variations(s);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(q.leading().sign());
  return sign_variations(s);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(q.degree() % 2 == 0 ? q.leading().sign() : -q.leading().sign());
  return sign_variations(s);
}

int sturm_count(const RatPoly& p, const Interval& iv) { return SturmSequence(p).count(iv); }

Rational cauchy_bound(const RatPoly& p) {
  Rational best(0);
  const Rational lead = p.leading().abs();
  for (int i = 0; i < p.degree(); ++i) best = std::max(best, p.coeff(i).abs() / lead);
  return best + Rational(1);
}

namespace {

void bisect_isolate(const SturmSequence& s, Interval iv, int count, std::vector<Interval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(iv);
    return;
  }
  const Rational mid = iv.midpoint();
  Interval left{iv.lo, mid};
  Interval right{mid, iv.hi};
  const int nl = s.count(left);
  bisect_isolate(s, left, nl, out);
  bisect_isolate(s, right, count - nl, out);
}

std::vector<IsolatedRoot> attach_multiplicity(const RatPoly& p, const std::vector<Interval>& ivs) {
  const auto factors = square_free_decomposition(p);
  std::vector<IsolatedRoot> out;
  for (const auto& iv : ivs) {
    int mult = 1;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() < 1) continue;
      if (SturmSequence(factors[i]).count(iv) == 1) {
        mult = static_cast<int>(i) + 1;
        break;
      }
    }
    out.push_back({iv, mult});
  }
  return out;
}

}  // namespace

std::vector<IsolatedRoot> isolate_positive_roots(const RatPoly& p) {
  if (p.is_zero()) throw Error(Errc::invalid_parameters, "root isolation of the zero polynomial");
  if (p.degree() < 1) return {};
  const RatPoly sf = square_free_part(p);
  const SturmSequence s(sf);
  const Interval whole{Rational(0), cauchy_bound(sf)};
  std::vector<Interval> ivs;
  bisect_isolate(s, whole, s.count(whole), ivs);
  return attach_multiplicity(p, ivs);
}

std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& p) {
  if (p.is_zero()) throw Error(Errc::invalid_parameters, "root isolation of the zero polynomial");
  if (p.degree() < 1) return {};
  const RatPoly sf = square_free_part(p);
  const SturmSequence s(sf);
  const Rational b = cauchy_bound(sf);
  const Interval whole{-b, b};
  std::vector<Interval> ivs;
  bisect_isolate(s, whole, s.count(whole), ivs);
  return attach_multiplicity(p, ivs);
}

Interval narrow_interval(const RatPoly& p, const Interval& iv, const Rational& tol, RefineMethod method) {
  if (tol.sign() <= 0) throw Error(Errc::tolerance_not_positive, "tolerance must be positive");
  const RatPoly f = square_free_part(p);
  Rational lo = iv.lo;
  Rational hi = iv.hi;

  auto exact_hit = [&](const Rational& r) {
    return Interval{std::max(iv.lo, r - tol / Rational(2)), r};
  };

  const int s_hi = f.sign_at(hi);
  if (s_hi == 0) return exact_hit(hi);
  int s_lo = f.sign_at(lo);
  // A root exactly at lo lies outside (lo, hi]; just right of it the sign is opposite to p(hi).
  if (s_lo == 0) s_lo = -s_hi;
  if (s_lo == s_hi) throw Error(Errc::invalid_parameters, "interval does not bracket a simple root");

  const RatPoly df = f.derivative();
  const unsigned bits = bits_for(tol);
  while (hi - lo >= tol) {
    if (method == RefineMethod::newton) {
      const Rational m = (lo + hi) / Rational(2);
      const Rational slope = df(m);
      if (!slope.is_zero()) {
        const Rational c = floor_dyadic(m - f(m) / slope, bits);
        const Rational delta = tol / Rational(4);
        const Rational a = c - delta;
        const Rational b = c + delta;
        if (lo < a && b < hi) {
          const int sa = f.sign_at(a);
          const int sb = f.sign_at(b);
          if (sb == 0) return exact_hit(b);
          if (sa == 0) return exact_hit(a);
          if (sa == s_lo && sb != s_lo) return Interval{a, b};
          if (sa == s_lo) lo = a;
          else hi = a;
          if (sb == s_lo) lo = std::max(lo, b);
          else hi = std::min(hi, b);
        }
      }
    }
    const Rational mid = (lo + hi) / Rational(2);
    const int s = f.sign_at(mid);
    if (s == 0) return exact_hit(mid);
    if (s == s_lo) lo = mid;
    else hi = mid;
  }
  // Rational roots of small height are recovered exactly.
  const Rational simple = simplest_between(lo, hi);
  if (lo < simple && f.sign_at(simple) == 0) return exact_hit(simple);
  return Interval{lo, hi};
}

Rational refine_root(const RatPoly& p, const Interval& iv, const Rational& tol, RefineMethod method) {
  const Interval n = narrow_interval(p, iv, tol, method);
  if (p.sign_at(n.hi) == 0) return n.hi;
  return n.midpoint();
}

}  // namespace hua
