#include <doctest.h>

#include "hua/domains.hpp"
#include "hua/error.hpp"
#include "hua/huadecomp.hpp"
#include "hua/luqikeng.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <random>

using namespace hua;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

const Rational kTol(1, 1000000000000L);

const char* const kLowDim[] = {"I_{1,2}", "I_{1,3}", "IV_3", "I_{1,4}", "IV_4"};

}  // namespace

TEST_CASE("decide on documented cases") {
  const Verdict v = decide(catalog_lookup("I_{1,2}"), 2, R(4));
  CHECK(v.is_lu_qikeng);
  CHECK(v.boundary);
  CHECK_FALSE(decide(catalog_lookup("IV_4"), 7, R(7)).is_lu_qikeng);
  CHECK(decide(catalog_lookup("I_{1,1}"), 1, R(1000000)).is_lu_qikeng);
  CHECK(decide(catalog_lookup("I_{1,2}"), 2, R(3)).is_lu_qikeng);
  CHECK_FALSE(decide(catalog_lookup("I_{1,2}"), 2, R(5)).is_lu_qikeng);
  CHECK(decide(catalog_lookup("I_{1,2}"), 3, R(1000)).is_lu_qikeng);
}

TEST_CASE("decide at a rational threshold is a boundary Lu Qikeng verdict") {
  const DomainSpec s = catalog_lookup("IV_3");
  const Verdict v = decide(s, 3, R(2));
  CHECK(v.is_lu_qikeng);
  CHECK(v.boundary);
  CHECK_FALSE(decide(s, 3, R(2) + R(1, 1000000)).is_lu_qikeng);
  const ThresholdReport t = threshold(s, 3, kTol);
  CHECK(t.mu_m_1.exact);
  CHECK(t.mu_m_1.value == R(2));
}

TEST_CASE("decide rejects invalid input") {
  const DomainSpec s = catalog_lookup("I_{1,3}");
  CHECK_THROWS_AS(decide(s, 1, R(0)), Error);
  CHECK_THROWS_AS(decide(s, 1, R(-1)), Error);
  CHECK_THROWS_AS(decide(s, 0, R(1)), Error);
  CHECK_THROWS_AS(threshold(s, 1, R(0)), Error);
}

TEST_CASE("decide on higher-dimensional bases uses the generic path") {
  const DomainSpec s = catalog_lookup("I_{2,3}");
  const Verdict small = decide(s, 1, R(1, 10));
  CHECK(small.is_lu_qikeng);
  const Verdict v = decide(s, 1, R(50));
  CHECK(v.method.size() > 0);
  // Consistency of the verdict with the threshold of q_m is not claimed here,
  // but the exact half-plane test must agree with itself on repeated calls.
  CHECK(decide(s, 1, R(50)).is_lu_qikeng == v.is_lu_qikeng);
}

TEST_CASE("closed-form thresholds are roots of q_m") {
  using boost::multiprecision::sqrt;
  struct Case {
    const char* type;
    int m;
    BigFloat value;
  };
  const BigFloat two(2), three(3);
  const std::vector<Case> cases = {
      {"I_{1,3}", 1, sqrt(two)},
      {"I_{1,3}", 2, (1 + sqrt(BigFloat(7))) / 2},
      {"I_{1,3}", 3, 1 + sqrt(BigFloat(5) / 2)},
      {"I_{1,3}", 4, 2 + sqrt(BigFloat(6))},
      {"I_{1,3}", 5, 8 + sqrt(BigFloat(70))},
      {"IV_3", 1, 2 / sqrt(three)},
      {"IV_3", 2, (3 + sqrt(BigFloat(73))) / 8},
      {"IV_3", 3, two},
      {"IV_3", 4, (9 + sqrt(BigFloat(129))) / 6},
      {"IV_3", 5, 2 * (3 + sqrt(BigFloat(10)))},
      {"I_{1,4}", 1, sqrt(three / 2)},
      {"IV_4", 1, sqrt(23 - sqrt(BigFloat(337))) / 2},
  };
  for (const Case& c : cases) {
    CAPTURE(c.type);
    CAPTURE(c.m);
    const MuPoly q = q_poly(catalog_lookup(c.type), c.m);
    const BigFloat at = q(c.value);
    CHECK(abs(at) < BigFloat("1e-40"));
    const ThresholdReport t = threshold(catalog_lookup(c.type), c.m, kTol);
    REQUIRE(t.mu_m_1.finite);
    CHECK(abs(t.mu_m_1.value.to_bigfloat() - c.value) < BigFloat("1e-11"));
  }
}

TEST_CASE("thresholds increase with m up to m_Omega") {
  for (const char* name : kLowDim) {
    CAPTURE(name);
    const DomainSpec s = catalog_lookup(name);
    const MOmegaReport mo = m_omega(s);
    Rational prev(0);
    for (int m = 1; m < mo.m_omega; ++m) {
      const ThresholdReport t = threshold(s, m, kTol);
      REQUIRE(t.mu_m_1.finite);
      CHECK(prev < t.mu_m_1.value);
      prev = t.mu_m_1.value;
    }
    CHECK_FALSE(threshold(s, mo.m_omega, kTol).mu_m_1.finite);
  }
}

TEST_CASE("m_Omega values") {
  CHECK(m_omega(catalog_lookup("I_{1,1}")).m_omega == 1);
  CHECK(m_omega(catalog_lookup("I_{1,2}")).m_omega == 3);
  CHECK(m_omega(catalog_lookup("I_{1,3}")).m_omega == 6);
  CHECK(m_omega(catalog_lookup("IV_3")).m_omega == 6);
  CHECK(m_omega(catalog_lookup("I_{1,4}")).m_omega == 8);
  const MOmegaReport r = m_omega(catalog_lookup("IV_4"));
  CHECK(r.m_omega == 8);
  CHECK(r.proven);
  CHECK(r.q_positivity_proven);
}

TEST_CASE("q positivity certificates match m_Omega") {
  CHECK(q_positive_for_all_m_from(catalog_lookup("I_{1,2}"), 3));
  CHECK_FALSE(q_positive_for_all_m_from(catalog_lookup("I_{1,2}"), 2));
  CHECK(q_positive_for_all_m_from(catalog_lookup("I_{1,3}"), 6));
  CHECK_FALSE(q_positive_for_all_m_from(catalog_lookup("I_{1,3}"), 5));
}

TEST_CASE("decide agrees with the refined threshold on random samples") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> pick(0, 4), mm(1, 7);
  std::uniform_int_distribution<long> num(1, 20000);
  int samples = 0;
  while (samples < 200) {
    const DomainSpec s = catalog_lookup(kLowDim[pick(rng)]);
    const int m = mm(rng);
    const Rational mu(num(rng), 1000);
    const ThresholdReport t = threshold(s, m, kTol);
    ++samples;
    const bool below = !t.mu_m_1.finite || mu <= t.mu_m_1.value;
    CHECK(decide(s, m, mu).is_lu_qikeng == below);
  }
}

TEST_CASE("threshold reports for documented cases") {
  const ThresholdReport a = threshold(catalog_lookup("I_{1,4}"), 2, kTol);
  REQUIRE(a.positive_root_count == 2);
  CHECK(a.mu_m_1.value.to_double() == doctest::Approx(1.41518).epsilon(1e-5));
  CHECK(a.mu_m_2.value.to_double() == doctest::Approx(11.333).epsilon(1e-4));
  CHECK(a.verified_sufficient);
  CHECK(a.proven);
  const ThresholdReport b = threshold(catalog_lookup("I_{1,2}"), 5, kTol);
  CHECK_FALSE(b.mu_m_1.finite);
  CHECK(b.positive_root_count == 0);
  CHECK(b.verified_sufficient);
  const ThresholdReport c = threshold(catalog_lookup("I_{1,2}"), 2, kTol);
  CHECK(c.mu_m_1.exact);
  CHECK(c.mu_m_1.value == R(4));
}

TEST_CASE("sign propositions hold as polynomial facts") {
  // Normalized P'(1/2) for the ball of dimension 2 is 3 + (m-1) mu.
  const DomainSpec s = catalog_lookup("I_{1,2}");
  for (int m = 1; m <= 20; ++m) {
    const MuPoly d = normalized_derivative_at_half(s, m, 1);
    CHECK(d.coeff(0) > R(0));
    for (const auto& c : d.coeffs()) CHECK(c >= R(0));
  }
  // P''(1/2) > 0 for the 3-dimensional bases, and P'''(1/2) > 0 for the 4-dimensional ones.
  for (const char* name : {"I_{1,3}", "IV_3", "I_{1,4}", "IV_4"}) {
    const DomainSpec t = catalog_lookup(name);
    const int k = t.d - 1;
    for (int m = 1; m <= 20; ++m) {
      for (const auto& c : normalized_derivative_at_half(t, m, k).coeffs()) CHECK(c >= R(0));
    }
  }
}

TEST_CASE("Hurwitz condition polynomials") {
  const DomainSpec s = catalog_lookup("I_{1,3}");
  // R_1 has the single positive root 3, R_2 the root 7.
  CHECK(hurwitz_condition_poly(s, 1)(R(3)) == R(0));
  CHECK(hurwitz_condition_poly(s, 2)(R(7)) == R(0));
  CHECK_THROWS_AS(hurwitz_condition_poly(catalog_lookup("I_{1,2}"), 1), Error);
  const DomainSpec b4 = catalog_lookup("I_{1,4}");
  const MuPoly g1 = normalized_hurwitz_condition_poly(b4, 1);
  CHECK(g1(R(2)) == R(0));
  CHECK(g1(R(4)) == R(0));
}

TEST_CASE("half-plane root counts") {
  const DomainSpec s = catalog_lookup("I_{1,4}");
  HalfPlaneCount c = halfplane_root_count(s, 1, R(1));
  CHECK(c.count == 0);
  c = halfplane_root_count(s, 1, R(2));
  CHECK(c.count == 1);
  CHECK(c.all_real);
  c = halfplane_root_count(s, 1, R(5));
  CHECK(c.count == 2);
  CHECK(c.real_count == 2);
  CHECK(c.max_abs_imag < 1e-9);
  CHECK_THROWS_AS(halfplane_root_count(catalog_lookup("I_{1,2}"), 2, R(4)), Error);
}

TEST_CASE("low-dimensional catalog membership") {
  for (const char* name : kLowDim) CHECK(is_low_dimensional_catalog(catalog_lookup(name)));
  CHECK(is_low_dimensional_catalog(catalog_lookup("I_{1,1}")));
  CHECK_FALSE(is_low_dimensional_catalog(catalog_lookup("I_{2,3}")));
  CHECK_FALSE(is_low_dimensional_catalog(make_spec(1, 1, 2)));
}
