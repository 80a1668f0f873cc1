#include "hua/oracle.hpp"

#include "hua/domains.hpp"
#include "hua/error.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <random>

namespace hua {

namespace {

// Minimal complex arithmetic over BigFloat; std::complex is unspecified for
// non-builtin scalars.
struct BigComplex {
  BigFloat re = 0;
  BigFloat im = 0;

  friend BigComplex operator+(const BigComplex& x, const BigComplex& y) { return {x.re + y.re, x.im + y.im}; }
  friend BigComplex operator-(const BigComplex& x, const BigComplex& y) { return {x.re - y.re, x.im - y.im}; }
  friend BigComplex operator*(const BigComplex& x, const BigComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend BigComplex operator/(const BigComplex& x, const BigComplex& y) {
    const BigFloat den = y.re * y.re + y.im * y.im;
    return {(x.re * y.re + x.im * y.im) / den, (x.im * y.re - x.re * y.im) / den};
  }
  BigFloat abs() const { return sqrt(re * re + im * im); }
};

struct Evaluation {
  BigComplex value;
  BigComplex slope;
  BigFloat magnitude_bound;  // Σ|a_i||z|^i
};

Evaluation horner(const std::vector<BigFloat>& c, const BigComplex& z) {
  BigComplex v{c.back(), 0};
  BigComplex dv{0, 0};
  BigFloat bound = abs(c.back());
  const BigFloat r = z.abs();
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    dv = dv * z + v;
    v = v * z + BigComplex{c[static_cast<size_t>(i)], 0};
    bound = bound * r + abs(c[static_cast<size_t>(i)]);
  }
  return {v, dv, bound};
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const RatPoly& p, double tol) {
  if (p.degree() < 1) throw Error(Errc::invalid_parameters, "numeric_roots needs degree >= 1");

  // Exact zero roots are split off; the relative residual cannot certify them.
  int zeros = 0;
  while (p.coeff(zeros).is_zero()) ++zeros;
  const int n = p.degree() - zeros;
  std::vector<std::complex<double>> out(static_cast<size_t>(zeros), {0.0, 0.0});
  if (n == 0) return out;

  std::vector<BigFloat> c;
  c.reserve(static_cast<size_t>(n) + 1);
  const Rational lead = p.leading();
  for (int i = zeros; i <= p.degree(); ++i) c.push_back((p.coeff(i) / lead).to_bigfloat());

  // Starting points on a circle whose radius is the geometric mean of the root moduli.
  BigFloat radius = pow(abs(c[0]) + BigFloat("1e-30"), BigFloat(1) / n);
  radius = std::max(radius, BigFloat("1e-3"));
  std::vector<BigComplex> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const BigFloat angle = BigFloat(2) * boost::math::constants::pi<BigFloat>() * k / n + BigFloat("0.4");
    z[static_cast<size_t>(k)] = {radius * cos(angle), radius * sin(angle)};
  }

  const BigFloat step_eps("1e-45");
  const int max_iter = 2000;
  bool converged = false;
  for (int iter = 0; iter < max_iter && !converged; ++iter) {
    converged = true;
    for (int k = 0; k < n; ++k) {
      const auto ev = horner(c, z[static_cast<size_t>(k)]);
      if (ev.value.abs() <= step_eps * ev.magnitude_bound) continue;
      const BigComplex ratio = ev.value / ev.slope;
      BigComplex repulsion{0, 0};
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        repulsion = repulsion + BigComplex{1, 0} / (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
      }
      const BigComplex step = ratio / (BigComplex{1, 0} - ratio * repulsion);
      z[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] - step;
      if (step.abs() > step_eps * (BigFloat(1) + z[static_cast<size_t>(k)].abs())) converged = false;
    }
  }

  for (const auto& root : z) {
    const auto ev = horner(c, root);
    const BigFloat residual = ev.value.abs() / ev.magnitude_bound;
    if (!(residual < BigFloat(tol))) {
      throw Error(Errc::oracle_non_convergence, "root iteration did not reach the residual tolerance");
    }
    out.emplace_back(root.re.convert_to<double>(), root.im.convert_to<double>());
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

MonteCarloEstimate hua_integral_mc(int n, double s, long samples, std::uint64_t seed) {
  if (n < 1 || samples < 2) throw Error(Errc::invalid_parameters, "need n >= 1 and at least two samples");
  if (!(s > -1)) throw Error(Errc::invalid_parameters, "need s > -1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double sum = 0;
  double sum_sq = 0;
  for (long i = 0; i < samples;) {
    double norm_sq = 0;
    for (int k = 0; k < 2 * n; ++k) {
      const double x = unit(rng);
      norm_sq += x * x;
    }
    if (norm_sq >= 1) continue;
    const double f = std::pow(1 - norm_sq, s);
    sum += f;
    sum_sq += f * f;
    ++i;
  }
  MonteCarloEstimate est;
  est.samples = samples;
  est.estimate = sum / samples;
  const double var = std::max(0.0, sum_sq / samples - est.estimate * est.estimate);
  est.std_error = std::sqrt(var * samples / (samples - 1) / samples);
  double expected = 1;
  for (int i = 1; i <= n; ++i) expected *= i / (s + i);
  est.expected = expected;
  return est;
}

namespace {

// Kronrod 15-point nodes and weights, with the embedded 7-point Gauss weights.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrod[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGauss[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double kron = kKronrod[7] * fc;
  double gauss = kGauss[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double x = h * kNodes[i];
    const double sum = f(c - x) + f(c + x);
    kron += kKronrod[i] * sum;
    if (i % 2 == 1) gauss += kGauss[i / 2] * sum;
  }
  return {lo, hi, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

QuadratureResult adaptive_gauss_kronrod(const std::function<double(double)>& f, double lo, double hi,
                                        double abs_tol, double rel_tol, int max_intervals) {
  std::priority_queue<Segment> queue;
  queue.push(gk15(f, lo, hi));
  double value = queue.top().value;
  double error = queue.top().error;
  int intervals = 1;
  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (intervals >= max_intervals) {
      throw Error(Errc::quadrature_budget_exceeded, "adaptive quadrature exceeded its interval budget");
    }
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Segment left = gk15(f, worst.lo, mid);
    const Segment right = gk15(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++intervals;
  }
  // Recompute the sums to shed accumulated rounding from the incremental updates.
  value = 0;
  error = 0;
  while (!queue.empty()) {
    value += queue.top().value;
    error += queue.top().error;
    queue.pop();
  }
  return {value, error, intervals};
}

SelbergCheck selberg_check(int a, int b, int r, double s, double rel_tol) {
  if (r != 1 && r != 2) throw Error(Errc::invalid_parameters, "quadrature supports rank 1 and 2 only");
  if (!(s > -1)) throw Error(Errc::invalid_parameters, "need s > -1");
  if (a < 0 || b < 0) throw Error(Errc::invalid_parameters, "need a, b >= 0");

  auto weight = [&](double t) { return std::pow(1 - t, s) * std::pow(t, b); };
  SelbergCheck out;
  if (r == 1) {
    const auto q = adaptive_gauss_kronrod(weight, 0, 1, 0, rel_tol);
    out.quadrature = q.value;
    out.error_estimate = q.error;
  } else {
    // The integrand is symmetric; integrate over t2 < t1 and double, which keeps
    // the |t1 - t2|^a kink on the boundary of the inner range.
    auto outer = [&](double t1) {
      if (t1 <= 0) return 0.0;
      auto inner = [&](double t2) { return weight(t2) * std::pow(t1 - t2, a); };
      return weight(t1) * adaptive_gauss_kronrod(inner, 0, t1, 1e-300, rel_tol * 0.1).value;
    };
    const auto q = adaptive_gauss_kronrod(outer, 0, 1, 0, rel_tol);
    out.quadrature = 2 * q.value;
    out.error_estimate = 2 * q.error;
  }
  const RatPoly chi = hua_polynomial(make_spec(a, b, r));
  out.expected = selberg_constant(a, b, r).convert_to<double>() / chi(s);
  out.relative_deviation = std::abs(out.quadrature - out.expected) / std::abs(out.expected);
  return out;
}

}  // namespace hua
