#include <doctest.h>

#include "hua/error.hpp"
#include "hua/ratpoly.hpp"
#include "hua/rational.hpp"
#include "hua/roots.hpp"

#include <random>

using namespace hua;

namespace {

Rational random_rational(std::mt19937_64& rng, long span = 20, long den = 12) {
  std::uniform_int_distribution<long> n(-span, span);
  std::uniform_int_distribution<long> q(1, den);
  return Rational(n(rng), q(rng));
}

RatPoly random_poly(std::mt19937_64& rng, int max_degree = 5) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_rational(rng);
  return RatPoly(c);
}

Rational R(long p, long q = 1) { return Rational(p, q); }

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational(rng, 1000, 1000);
    const Rational b = random_rational(rng, 1000, 1000);
    for (const Rational& x : {a + b, a - b, a * b}) {
      CHECK(gcd(x.numerator(), x.denominator()) == 1);
      CHECK(x.denominator() > 0);
    }
  }
  CHECK(R(6, 4) == R(3, 2));
  CHECK(R(6, -4).str() == "-3/2");
  CHECK(R(10, 5).str() == "2");
}

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("3/2") == R(3, 2));
  CHECK(Rational::parse("-7") == R(-7));
  CHECK(Rational::parse("0.1") == R(1, 10));
  CHECK(Rational::parse("1.25e-2") == R(1, 80));
  CHECK(Rational::parse("2E3") == R(2000));
  CHECK(Rational::parse(" 4/6 ") == R(2, 3));
  CHECK(Rational::parse(".5") == R(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse("1e9999999"), Error);
  try {
    Rational::parse("x");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("division by zero is rejected") { CHECK_THROWS_AS(R(1) / R(0), Error); }

TEST_CASE("decimal rendering rounds to nearest") {
  CHECK(R(2, 3).decimal(3) == "0.667");
  CHECK(R(-1, 8).decimal(2) == "-0.13");
  CHECK(R(1, 3).decimal(0) == "0");
  CHECK(R(-1, 1000).decimal(2) == "0.00");
  CHECK(R(5).decimal(2) == "5.00");
}

TEST_CASE("simplest rational between two bounds") {
  CHECK(simplest_between(R(3, 10), R(1, 2)) == R(1, 2));
  CHECK(simplest_between(R(13, 10), R(14, 10)) == R(4, 3));
  CHECK(simplest_between(R(-7, 5), R(-13, 10)) == R(-4, 3));
  CHECK(simplest_between(R(-1), R(1)) == R(0));
  CHECK(simplest_between(R(199999, 100000), R(200001, 100000)) == R(2));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng, 50, 40), b = random_rational(rng, 50, 40);
    if (b < a) std::swap(a, b);
    const Rational s = simplest_between(a, b);
    CHECK(a <= s);
    CHECK(s <= b);
  }
}

TEST_CASE("polynomial ring laws on random inputs") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const RatPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    const Rational x = random_rational(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p * q)(x) == p(x) * q(x));
    CHECK((p + q)(x) == p(x) + q(x));
    CHECK(p - p == RatPoly());
  }
}

TEST_CASE("affine composition round-trips") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const RatPoly p = random_poly(rng, 8);
    CHECK(p.compose_affine(1, R(1, 2)).compose_affine(1, R(-1, 2)) == p);
    const Rational x = random_rational(rng);
    CHECK(p.compose_affine(R(3), R(-2))(x) == p(R(3) * x - R(2)));
  }
}

TEST_CASE("division with remainder") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const RatPoly a = random_poly(rng, 7);
    RatPoly b = random_poly(rng, 4);
    if (b.is_zero()) b = RatPoly::constant(1);
    const auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  const RatPoly x2m1{R(-1), R(0), R(1)};
  CHECK(x2m1.exact_divide(RatPoly::linear_root(R(1))) == RatPoly::linear_root(R(-1)));
  CHECK_THROWS_AS(x2m1.exact_divide(RatPoly::linear_root(R(2))), Error);
}

TEST_CASE("gcd and square-free decomposition") {
  const RatPoly a = RatPoly::linear_root(R(1));
  const RatPoly b = RatPoly::linear_root(R(-2, 3));
  const RatPoly c{R(1), R(0), R(1)};
  const RatPoly p = R(5) * a * pow(b, 2) * pow(c, 3);
  CHECK(gcd(p, p.derivative()).degree() == 1 + 2 * 2);
  CHECK(square_free_part(p) == (a * b * c).monic());
  const auto f = square_free_decomposition(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0].monic() == a.monic());
  CHECK(f[1].monic() == b.monic());
  CHECK(f[2].monic() == c.monic());
  CHECK_FALSE(is_square_free(p));
  CHECK(is_square_free(a * b * c));
}

TEST_CASE("derivative and evaluation") {
  const RatPoly p{R(1), R(2), R(3), R(4)};
  CHECK(p.derivative() == RatPoly({R(2), R(6), R(12)}));
  CHECK(p.derivative(3) == RatPoly::constant(24));
  CHECK(p.derivative(4).is_zero());
  CHECK(p(R(1, 2)) == R(1) + R(1) + R(3, 4) + R(1, 2));
  CHECK(p(0.5) == doctest::Approx(3.25));
  CHECK(p.reversed() == RatPoly({R(4), R(3), R(2), R(1)}));
}

TEST_CASE("Sturm counts known roots") {
  // (x-1)(x-2)(x-3)
  const RatPoly p = RatPoly::linear_root(R(1)) * RatPoly::linear_root(R(2)) * RatPoly::linear_root(R(3));
  CHECK(sturm_count(p, {R(0), R(4)}) == 3);
  CHECK(sturm_count(p, {R(1), R(2)}) == 1);  // (1, 2] holds 2 only
  CHECK(sturm_count(p, {R(3, 2), R(5, 2)}) == 1);
  CHECK(SturmSequence(p).count_real() == 3);
  const RatPoly x2p1{R(1), R(0), R(1)};
  CHECK(SturmSequence(x2p1).count_real() == 0);
  CHECK_THROWS_AS(SturmSequence(p * p), Error);
}

TEST_CASE("Sturm counts are additive over partitions") {
  std::mt19937_64 rng(6);
  int tested = 0;
  while (tested < 100) {
    const RatPoly p = random_poly(rng, 7);
    if (p.degree() < 1 || !is_square_free(p)) continue;
    ++tested;
    const SturmSequence s(p);
    Rational lo = R(-30), hi = R(30);
    std::vector<Rational> cuts{lo, hi};
    for (int k = 0; k < 5; ++k) cuts.push_back(random_rational(rng, 29, 7));
    std::sort(cuts.begin(), cuts.end());
    int sum = 0;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) sum += s.count({cuts[k], cuts[k + 1]});
    CHECK(sum == s.count({lo, hi}));
  }
}

TEST_CASE("root isolation with multiplicity") {
  const RatPoly p = pow(RatPoly::linear_root(R(1, 3)), 2) * RatPoly::linear_root(R(5)) *
                    RatPoly({R(-2), R(0), R(1)}) * RatPoly::linear_root(R(-4));
  const auto pos = isolate_positive_roots(p);
  REQUIRE(pos.size() == 3);
  CHECK(pos[0].iv.contains(R(1, 3)));
  CHECK(pos[0].multiplicity == 2);
  CHECK(pos[1].multiplicity == 1);
  CHECK(pos[2].iv.contains(R(5)));
  const auto all = isolate_real_roots(p);
  CHECK(all.size() == 5);
  CHECK(cauchy_bound(p) > R(5));
}

TEST_CASE("refinement stays in the bracket and reaches the tolerance") {
  const RatPoly p{R(-2), R(0), R(1)};  // x^2 - 2
  const Interval iv{R(1), R(2)};
  const Rational tol(1, 1000000000000L);
  for (auto method : {RefineMethod::bisection, RefineMethod::newton}) {
    const Interval n = narrow_interval(p, iv, tol, method);
    CHECK(iv.lo <= n.lo);
    CHECK(n.hi <= iv.hi);
    CHECK(n.width() < tol);
    CHECK(n.contains(R(1414213562373095L, 1000000000000000L)));
    const Rational r = refine_root(p, iv, tol, method);
    CHECK(std::abs(r.to_double() - std::sqrt(2.0)) < 1e-11);
  }
  CHECK_THROWS_AS(refine_root(p, iv, R(0)), Error);
  CHECK_THROWS_AS(refine_root(p, iv, R(-1)), Error);
}

TEST_CASE("refinement output lies in the isolating interval for random polynomials") {
  std::mt19937_64 rng(7);
  const Rational tol(1, 1000000);
  int tested = 0;
  while (tested < 60) {
    const RatPoly p = random_poly(rng, 6);
    if (p.degree() < 1) continue;
    for (const auto& root : isolate_real_roots(p)) {
      ++tested;
      for (auto method : {RefineMethod::bisection, RefineMethod::newton}) {
        const Rational r = refine_root(p, root.iv, tol, method);
        CHECK(root.iv.lo < r);
        CHECK(r <= root.iv.hi);
      }
    }
  }
}

TEST_CASE("rational roots are recovered exactly") {
  const RatPoly p = RatPoly::linear_root(R(7, 3)) * RatPoly({R(-3), R(0), R(1)});
  const Interval n = narrow_interval(p, {R(2), R(5, 2)}, R(1, 1000000));
  CHECK(n.hi == R(7, 3));
  CHECK(refine_root(p, {R(2), R(5, 2)}, R(1, 1000000)) == R(7, 3));
}
