#include <doctest.h>

#include "golden_formulas.hpp"
#include "hua/domains.hpp"
#include "hua/huadecomp.hpp"
#include "hua/luqikeng.hpp"

using namespace hua;

namespace {

RatPoly computed(const golden::Formula& f) {
  const DomainSpec s = catalog_lookup(f.type);
  switch (f.kind) {
    case golden::Kind::q: return q_poly(s, f.m);
    case golden::Kind::q1:
    case golden::Kind::q2:
    case golden::Kind::q3: return normalized_derivative_at_half(s, f.m, golden::kind_order(f.kind));
    case golden::Kind::S:
    case golden::Kind::G: return normalized_hurwitz_condition_poly(s, f.m);
  }
  return {};
}

}  // namespace

TEST_CASE("displayed closed forms match the computed polynomials") {
  const auto formulas = golden::all_formulas();
  CHECK(formulas.size() > 150);
  int misprints = 0;
  for (const auto& f : formulas) {
    CAPTURE(f.type);
    CAPTURE(f.m);
    CAPTURE(f.label);
    const RatPoly got = computed(f);
    if (f.corrected) {
      ++misprints;
      CHECK(got == *f.corrected);
      CHECK_FALSE(got == f.printed);
    } else {
      CHECK(got == f.printed);
    }
  }
  // The known misprints: IV_3 S_m general (6), I_{1,4} S_2 and S_4, IV_4 q_m general (6), IV_4 q_1^2.
  CHECK(misprints == 15);
}

TEST_CASE("displayed small cases") {
  // I_{1,3}: S_1 = [4](3 + mu)(9 - 3 mu).
  const RatPoly s1 = normalized_hurwitz_condition_poly(catalog_lookup("I_{1,3}"), 1);
  CHECK(s1 == RatPoly::constant(4) * RatPoly({Rational(3), Rational(1)}) * RatPoly({Rational(9), Rational(-3)}));
  // I_{1,4}: S_1 = 32 (mu - 2)(mu + 2)(mu - 4) after removing (5)^2 (4 + mu).
  const RatPoly g1 = normalized_hurwitz_condition_poly(catalog_lookup("I_{1,4}"), 1);
  const RatPoly prefix = RatPoly::constant(25) * RatPoly({Rational(4), Rational(1)});
  CHECK(g1.exact_divide(prefix) ==
        Rational(32) * RatPoly::linear_root(Rational(2)) * RatPoly::linear_root(Rational(-2)) *
            RatPoly::linear_root(Rational(4)));
  // IV_3 q_3 = (3 + 2 mu) (1 + 2 mu)(2 - mu) / 2.
  CHECK(q_poly(catalog_lookup("IV_3"), 3) ==
        Rational(1, 2) * RatPoly({Rational(3), Rational(2)}) * RatPoly({Rational(1), Rational(2)}) *
            RatPoly({Rational(2), Rational(-1)}));
}
