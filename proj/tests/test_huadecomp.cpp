#include <doctest.h>

#include "hua/domains.hpp"
#include "hua/error.hpp"
#include "hua/huadecomp.hpp"

#include <random>

using namespace hua;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

const RatPoly mu{R(0), R(1)};

RatPoly lin(long c0, long c1) { return RatPoly({R(c0), R(c1)}); }

}  // namespace

TEST_CASE("decomposition coefficients of the low-dimensional bases") {
  SUBCASE("disc") {
    const auto C = decompose_chi(catalog_lookup("I_{1,1}"));
    REQUIRE(C.size() == 2);
    CHECK(C[0] == RatPoly::constant(1));
    CHECK(C[1] == lin(1, -1));
  }
  SUBCASE("ball of dimension 2") {
    const auto C = decompose_chi(catalog_lookup("I_{1,2}"));
    CHECK(C[1] == R(3) * lin(1, -1));
    CHECK(C[2] == lin(1, -1) * lin(2, -1));
  }
  SUBCASE("ball of dimension 3") {
    const auto C = decompose_chi(catalog_lookup("I_{1,3}"));
    CHECK(C[1] == R(6) * lin(1, -1));
    CHECK(C[2] == lin(1, -1) * lin(11, -7));
    CHECK(C[3] == lin(1, -1) * lin(2, -1) * lin(3, -1));
  }
  SUBCASE("Lie ball of dimension 3") {
    const auto C = decompose_chi(catalog_lookup("IV_3"));
    CHECK(C[1] == R(3) * RatPoly({R(3, 2), R(-2)}));
    CHECK(C[2] == lin(1, -1) * RatPoly({R(13, 2), R(-7)}));
    CHECK(C[3] == lin(1, -1) * lin(2, -1) * RatPoly({R(3, 2), R(-1)}));
  }
  SUBCASE("ball of dimension 4") {
    const auto C = decompose_chi(catalog_lookup("I_{1,4}"));
    CHECK(C[1] == R(10) * lin(1, -1));
    CHECK(C[2] == R(5) * lin(1, -1) * lin(7, -5));
    CHECK(C[3] == R(5) * lin(1, -1) * lin(5, -3) * lin(2, -1));
    CHECK(C[4] == lin(1, -1) * lin(2, -1) * lin(3, -1) * lin(4, -1));
  }
  SUBCASE("Lie ball of dimension 4") {
    const auto C = decompose_chi(catalog_lookup("IV_4"));
    CHECK(C[1] == R(2) * lin(4, -5));
    CHECK(C[2] == lin(1, -1) * lin(23, -25));
    CHECK(C[3] == lin(1, -1) * lin(7, -5) * lin(4, -3));
    CHECK(C[4] == lin(1, -1) * lin(2, -1) * lin(2, -1) * lin(3, -1));
  }
}

TEST_CASE("decomposition round-trips for every catalog domain") {
  for (const DomainSpec& s : catalog_enumerate(27)) {
    CAPTURE(s.name());
    const auto C = decompose_chi(s);
    REQUIRE(static_cast<int>(C.size()) == s.d + 1);
    CHECK(C[0] == RatPoly::constant(1));
    const BiPoly back = reconstruct(C);
    const BiPoly chi = chi_of_k_mu(s);
    REQUIRE(back.size() == chi.size());
    for (size_t i = 0; i < chi.size(); ++i) CHECK((back[i] - chi[i]).is_zero());
  }
}

TEST_CASE("decomposition specializes exactly at integer k") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(1, 40), den(1, 9);
  for (const DomainSpec& s : catalog_enumerate(10)) {
    const auto C = decompose_chi(s);
    const RatPoly chi = hua_polynomial(s);
    const Rational mu0(num(rng), den(rng));
    for (int k = 0; k <= s.d; ++k) {
      Rational sum(0);
      for (int j = 0; j <= s.d; ++j) sum += pow(mu0, static_cast<unsigned>(j)) * C[static_cast<size_t>(s.d - j)](mu0) * rising_factorial(R(k), j);
      CHECK(sum == chi(R(k) * mu0));
    }
  }
}

TEST_CASE("the k = 0 identity holds as a polynomial in mu") {
  for (const DomainSpec& s : catalog_enumerate(27)) {
    const auto C = decompose_chi(s);
    RatPoly sum;
    Rational fact(1);
    for (int j = 0; j <= s.d; ++j) {
      if (j > 0) fact *= R(j);
      sum += RatPoly::monomial(fact, j) * C[static_cast<size_t>(s.d - j)];
    }
    CHECK(sum == RatPoly::constant(hua_polynomial(s)(R(0))));
  }
}

TEST_CASE("c-form coefficients") {
  const DomainSpec s = catalog_lookup("I_{1,3}");
  const auto c = c_form(s);
  const auto C = decompose_chi(s);
  CHECK(c[0] == C[3]);
  CHECK(c[2] == R(2) * mu * mu * C[1]);
  CHECK(c[3] == R(6) * mu * mu * mu);
}

TEST_CASE("representative polynomial of the ball of dimension 2") {
  const DomainSpec s = catalog_lookup("I_{1,2}");
  for (int m = 0; m <= 5; ++m) {
    const EtaMuPoly P = representative_polynomial(s, m);
    const Rational M(m);
    CHECK(P.eta_degree() == 2);
    CHECK(P.coefficient(0) == lin(1, -1) * lin(2, -1));
    CHECK(P.coefficient(1) == R(3) * (M + 1) * mu * lin(1, -1));
    CHECK(P.coefficient(2) == (M + 1) * (M + 2) * mu * mu);
  }
  // P at mu = 1/2, m = 2: 3 eta^2 + 9/4 eta + 3/4.
  CHECK(representative_polynomial(s, 2).at_mu(R(1, 2)) == RatPoly({R(3, 4), R(9, 4), R(3)}));
}

TEST_CASE("leading eta coefficient is (m+1)_d mu^d") {
  for (const DomainSpec& s : catalog_enumerate(12)) {
    for (int m = 0; m <= 4; ++m) {
      const EtaMuPoly P = representative_polynomial(s, m);
      CHECK(P.eta_degree() == s.d);
      CHECK(P.coefficient(s.d) == RatPoly::monomial(rising_factorial(R(m), s.d), s.d));
    }
  }
}

TEST_CASE("q_m factorization spot checks") {
  const DomainSpec b4 = catalog_lookup("I_{1,4}");
  const DomainSpec b3 = catalog_lookup("I_{1,3}");
  const DomainSpec l3 = catalog_lookup("IV_3");
  for (int m = 1; m <= 10; ++m) {
    CAPTURE(m);
    CHECK(q_poly(b4, m).divisible_by(lin(4, m)));
    CHECK(q_poly(b3, m).divisible_by(lin(4, m - 1)));
    CHECK(q_poly(l3, m).divisible_by(lin(3, m - 1)));
  }
}

TEST_CASE("derivatives at one half") {
  const DomainSpec s = catalog_lookup("I_{1,2}");
  for (int m = 1; m <= 6; ++m) {
    CHECK(normalized_derivative_at_half(s, m, 1) == lin(3, m - 1));
    CHECK(derivative_at_half(s, m, 1) == R(m + 1) * mu * lin(3, m - 1));
    CHECK(normalized_derivative_at_half(s, m, 2) == RatPoly::constant(R(2)));
  }
  CHECK_THROWS_AS(derivative_at_half(s, 1, 0), Error);
  CHECK_THROWS_AS(derivative_at_half(s, 1, 3), Error);
}

TEST_CASE("q_m with symbolic m agrees with each instance") {
  for (const char* name : {"I_{1,2}", "I_{1,3}", "IV_3", "I_{1,4}", "IV_4", "I_{2,3}"}) {
    const DomainSpec s = catalog_lookup(name);
    const BiPoly sym = q_coefficients_in_m(s);
    for (int m = 0; m <= 9; ++m) {
      std::vector<Rational> c;
      for (const auto& cm : sym) c.push_back(cm(R(m)));
      CHECK(RatPoly(c) == q_poly(s, m));
    }
  }
}

TEST_CASE("dividing by a power of mu") {
  CHECK(divide_by_mu_power(RatPoly({R(0), R(0), R(3), R(1)}), 2) == RatPoly({R(3), R(1)}));
  CHECK_THROWS_AS(divide_by_mu_power(RatPoly({R(1), R(1)}), 1), Error);
}
