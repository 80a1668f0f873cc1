#include "hua/localization.hpp"

#include "hua/error.hpp"
#include "hua/roots.hpp"

namespace hua {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix hurwitz_matrix(const RatPoly& p) {
  const int n = p.degree();
  Matrix h(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) h[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = hurwitz_coeff(p, 2 * j - i);
  }
  return h;
}

// Determinant of the leading k×k block by Gaussian elimination with row pivoting.
Rational leading_determinant(const Matrix& full, int k) {
  Matrix m(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) m[static_cast<size_t>(i)].assign(full[static_cast<size_t>(i)].begin(), full[static_cast<size_t>(i)].begin() + k);
  Rational det(1);
  for (int c = 0; c < k; ++c) {
    int piv = c;
    while (piv < k && m[static_cast<size_t>(piv)][static_cast<size_t>(c)].is_zero()) ++piv;
    if (piv == k) return Rational(0);
    if (piv != c) {
      std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(c)]);
      det = -det;
    }
    const Rational& pv = m[static_cast<size_t>(c)][static_cast<size_t>(c)];
    det *= pv;
    for (int r = c + 1; r < k; ++r) {
      const Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(c)] / pv;
      if (f.is_zero()) continue;
      for (int j = c; j < k; ++j) m[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(c)][static_cast<size_t>(j)];
    }
  }
  return det;
}

void require_positive_leading(const RatPoly& p) {
  if (p.degree() < 0 || p.leading().sign() <= 0) {
    throw Error(Errc::leading_coefficient_not_positive, "leading coefficient must be positive");
  }
}

StabilityReport judge(std::vector<NamedValue> quantities, std::vector<Rational> minors) {
  StabilityReport rep;
  rep.quantities = std::move(quantities);
  rep.hurwitz_minors = std::move(minors);
  rep.stable = true;
  for (size_t i = 0; i < rep.quantities.size(); ++i) {
    if (rep.quantities[i].value.sign() <= 0) {
      rep.stable = false;
      rep.failed_index = static_cast<int>(i);
      rep.boundary = rep.quantities[i].value.is_zero();
      break;
    }
  }
  return rep;
}

RatPoly positive_leading(const RatPoly& p) { return p.leading().sign() < 0 ? -p : p; }

}  // namespace

Rational hurwitz_coeff(const RatPoly& p, int i) {
  const int n = p.degree();
  if (i < 0 || i > n) return Rational(0);
  return p.coeff(n - i);
}

std::vector<Rational> hurwitz_minors(const RatPoly& p) {
  require_positive_leading(p);
  const int n = p.degree();
  Matrix h = hurwitz_matrix(p);
  std::vector<Rational> minors;
  minors.reserve(static_cast<size_t>(n));
  // Fraction-free elimination: after step k the pivot h[k][k] equals Δ_{k+1}.
  Matrix m = h;
  Rational prev(1);
  for (int k = 0; k < n; ++k) {
    const Rational pivot = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    minors.push_back(pivot);
    if (pivot.is_zero()) {
      for (int rest = k + 2; rest <= n; ++rest) minors.push_back(leading_determinant(h, rest));
      break;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        auto& cell = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        cell = (cell * pivot - m[static_cast<size_t>(i)][static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(j)]) / prev;
      }
    }
    prev = pivot;
  }
  return minors;
}

StabilityReport is_stable(const RatPoly& p) {
  auto minors = hurwitz_minors(p);
  std::vector<NamedValue> q;
  for (size_t k = 0; k < minors.size(); ++k) q.push_back({"Delta_" + std::to_string(k + 1), minors[k]});
  return judge(std::move(q), std::move(minors));
}

StabilityReport lienard_chipart_deg4(const RatPoly& p) {
  if (p.degree() != 4) throw Error(Errc::wrong_degree, "Lienard-Chipart test expects degree 4");
  require_positive_leading(p);
  auto minors = hurwitz_minors(p);
  std::vector<NamedValue> q = {
      {"a_4", hurwitz_coeff(p, 4)},
      {"a_3", hurwitz_coeff(p, 3)},
      {"a_2", hurwitz_coeff(p, 2)},
      {"Delta_3", minors[2]},
  };
  return judge(std::move(q), std::move(minors));
}

StabilityReport roots_left_of_half_generic(const RatPoly& p) {
  if (p.degree() < 1) throw Error(Errc::degree_zero, "polynomial must have degree >= 1");
  return is_stable(positive_leading(p).compose_affine(1, Rational(1, 2)));
}

StabilityReport roots_left_of_half(const RatPoly& input) {
  if (input.degree() < 1) throw Error(Errc::degree_zero, "polynomial must have degree >= 1");
  const RatPoly p = positive_leading(input);
  const int n = p.degree();
  if (n > 4) return roots_left_of_half_generic(p);

  const Rational half(1, 2);
  const Rational at_half = p(half);
  const Rational d1 = p.derivative(1)(half);
  const Rational d2 = p.derivative(2)(half) / Rational(2);
  const Rational alpha = p.coeff(0), beta = p.coeff(1), gamma = p.coeff(2), delta = p.coeff(3), eps = p.coeff(4);

  std::vector<NamedValue> q;
  q.push_back({"P(1/2)", at_half});
  if (n >= 2) q.push_back({"P'(1/2)", d1});
  if (n == 4) q.push_back({"P''(1/2)/2", d2});
  if (n == 3) q.push_back({"Delta_2", cubic_delta2(alpha, beta, gamma, delta)});
  if (n == 4) q.push_back({"Delta_3", quartic_delta3(alpha, beta, gamma, delta, eps)});
  return judge(std::move(q), {});
}

ClosedHalfPlaneReport closed_left_of_half(const RatPoly& input) {
  if (input.degree() < 1) throw Error(Errc::degree_zero, "polynomial must have degree >= 1");
  const RatPoly q = positive_leading(input).compose_affine(1, Rational(1, 2));
  const int n = q.degree();

  // Q(iy) = E(y) + i O(y).
  std::vector<Rational> ev(static_cast<size_t>(n) + 1), od(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const int s = (k / 2) % 2 == 0 ? 1 : -1;
    if (k % 2 == 0) ev[static_cast<size_t>(k)] = q.coeff(k) * Rational(s);
    else od[static_cast<size_t>(k)] = q.coeff(k) * Rational(s);
  }
  // gcd(E, O) = gcd(Q(iy), Q(-iy)): its roots y give root pairs ±iy of Q.
  const RatPoly g = gcd(RatPoly(ev), RatPoly(od));

  ClosedHalfPlaneReport rep;
  RatPoly h = RatPoly::constant(1);
  bool all_real = true;
  if (g.degree() > 0) {
    // g is even or odd; H(z) ∝ G(-iz) has real coefficients in both cases.
    const bool odd = g.coeff(0).is_zero() && g.degree() % 2 == 1;
    std::vector<Rational> hc(static_cast<size_t>(g.degree()) + 1);
    for (int k = 0; k <= g.degree(); ++k) {
      const int e = odd ? (k - 1) / 2 : k / 2;
      hc[static_cast<size_t>(k)] = g.coeff(k) * Rational(e % 2 == 0 ? 1 : -1);
    }
    h = RatPoly(std::move(hc));
    const RatPoly sf = square_free_part(g);
    const int real_roots = SturmSequence(sf).count_real();
    all_real = real_roots == sf.degree();
    rep.root_on_line = real_roots > 0;
  }
  rep.line_factor = h;
  const RatPoly rest = positive_leading(q.exact_divide(h));
  if (rest.degree() >= 1) {
    rep.deflated = is_stable(rest);
  } else {
    rep.deflated.stable = true;
  }
  rep.none_in_open = all_real && rep.deflated.stable;
  return rep;
}

}  // namespace hua
