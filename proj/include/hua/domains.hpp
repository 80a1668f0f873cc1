#pragma once

#include "hua/ratpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hua {

// Numerical invariants (a, b, r) of an irreducible bounded symmetric domain.
struct DomainSpec {
  int a = 0;
  int b = 0;
  int r = 1;
  int d = 1;
  int genus = 2;
  std::string label;  // empty for raw triples

  std::string name() const;
  friend bool operator==(const DomainSpec& x, const DomainSpec& y) {
    return x.a == y.a && x.b == y.b && x.r == y.r;
  }
};

int dimension(int a, int b, int r);
int genus(int a, int b, int r);

// Spec from a raw triple; InvalidParameters for a < 0, b < 0 or r < 1.
DomainSpec make_spec(int a, int b, int r, std::string label = {});

// Grammar: I_{p,q} (1 <= p <= q), II_n (n >= 2), III_n (n >= 1), IV_n (n >= 3), EV, EVI.
// Braces are optional for single-index forms ("IV_3" and "IV_{3}" are equivalent).
DomainSpec catalog_lookup(const std::string& name);

// Every catalog domain of dimension <= max_dim, one entry per distinct name.
std::vector<DomainSpec> catalog_enumerate(int max_dim);

// χ(s) = ∏_{j=1}^{r} (s + 1 + (j-1)a/2)_{1 + b + (r-j)a}
RatPoly hua_polynomial(const DomainSpec& spec);

struct LinearFactor {
  Rational shift;  // factor (s + shift)
  int power = 1;
};
// Factors of χ grouped by root, ascending shift.
std::vector<LinearFactor> hua_linear_factors(const DomainSpec& spec);
// e.g. "(s+1)(s+2)^2(s+3)"
std::string hua_factored(const DomainSpec& spec);

// ∏_{j=1}^{r} Γ(b + 1 + (j-1)a/2) Γ(ja/2 + 1) / Γ(a/2 + 1)
BigFloat selberg_constant(int a, int b, int r);

}  // namespace hua
