// Command-line front end: Hua polynomials, representative polynomials and the Lu Qikeng decision.
#include "hua/domains.hpp"
#include "hua/error.hpp"
#include "hua/huadecomp.hpp"
#include "hua/kernel.hpp"
#include "hua/luqikeng.hpp"
#include "hua/oracle.hpp"
#include "hua/threshold_table.hpp"
#include "hua/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::json;

namespace {

enum Exit { lq = 0, not_lq = 1, bad_input = 2, boundary = 3, failure = 4 };

struct Globals {
  bool json = false;
  std::string tol_text = "1e-9";
  std::uint64_t seed = 20240611;
  std::vector<int> raw;
};

struct Target {
  std::string type;
};

hua::DomainSpec resolve(const Globals& g, const Target& t) {
  if (!g.raw.empty()) {
    if (!t.type.empty()) throw hua::Error(hua::Errc::parse_error, "give either a type name or --raw a b r, not both");
    return hua::make_spec(g.raw[0], g.raw[1], g.raw[2]);
  }
  if (t.type.empty()) throw hua::Error(hua::Errc::parse_error, "a domain type or --raw a b r is required");
  return hua::catalog_lookup(t.type);
}

hua::Rational tolerance(const Globals& g) {
  const hua::Rational tol = hua::Rational::parse(g.tol_text);
  if (tol.sign() <= 0) throw hua::Error(hua::Errc::tolerance_not_positive, "--tol must be positive");
  return tol;
}

json rationals(const hua::RatPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  if (p.is_zero()) a.push_back("0");
  return a;
}

std::string list_text(const hua::RatPoly& p) {
  std::string s = "[";
  const auto& c = p.coeffs();
  for (size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].str();
  return s + "]";
}

json spec_json(const hua::DomainSpec& s) {
  return {{"type", s.name()}, {"a", s.a}, {"b", s.b}, {"r", s.r}, {"d", s.d}, {"genus", s.genus}};
}

int decimal_digits(const hua::Rational& tol) {
  int digits = 0;
  hua::Rational scale(1);
  while (scale > tol && digits < 60) {
    scale /= hua::Rational(10);
    ++digits;
  }
  return digits + 2;
}

json root_json(const hua::RootValue& r, const hua::Rational& tol) {
  if (!r.finite) return {{"finite", false}, {"value", "+inf"}};
  return {{"finite", true},
          {"value", r.value.decimal(decimal_digits(tol))},
          {"rational", r.value.str()},
          {"interval", {r.iv.lo.str(), r.iv.hi.str()}},
          {"multiplicity", r.multiplicity},
          {"exact", r.exact},
          {"tol", tol.str()}};
}

std::string root_text(const hua::RootValue& r, const hua::Rational& tol) {
  if (!r.finite) return "+inf";
  return r.value.decimal(decimal_digits(tol)) + (r.exact ? " (exact " + r.value.str() + ")" : "");
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

int cmd_chi(const Globals& g, const Target& t) {
  const auto spec = resolve(g, t);
  const auto chi = hua::hua_polynomial(spec);
  json j = spec_json(spec);
  j["factored"] = hua::hua_factored(spec);
  j["coefficients"] = rationals(chi);
  std::ostringstream os;
  os << "chi(s) = " << hua::hua_factored(spec) << "\n"
     << "        = " << chi.str("s") << "\n"
     << "coefficients (ascending): " << list_text(chi) << "\n"
     << "a=" << spec.a << " b=" << spec.b << " r=" << spec.r << " d=" << spec.d << " genus=" << spec.genus << "\n";
  emit(g, j, os.str());
  return lq;
}

int cmd_decompose(const Globals& g, const Target& t) {
  const auto spec = resolve(g, t);
  const auto C = hua::decompose_chi(spec);
  json j = spec_json(spec);
  j["chi"] = rationals(hua::hua_polynomial(spec));
  j["C"] = json::array();
  std::ostringstream os;
  os << "chi(s) = " << hua::hua_factored(spec) << "\n";
  for (size_t i = 0; i < C.size(); ++i) {
    j["C"].push_back(rationals(C[i]));
    os << "C_" << i << "(mu) = " << C[i].str("mu") << "\n";
  }
  emit(g, j, os.str());
  return lq;
}

int cmd_poly(const Globals& g, const Target& t, int m, const std::string& mu_text) {
  const auto spec = resolve(g, t);
  const auto rep = hua::representative_polynomial(spec, m);
  json j = spec_json(spec);
  j["m"] = m;
  std::ostringstream os;
  if (!mu_text.empty()) {
    const auto mu = hua::Rational::parse(mu_text);
    const auto p = rep.at_mu(mu);
    j["mu"] = mu.str();
    j["coefficients"] = rationals(p);
    os << "P(eta) = " << p.str("eta") << "\n";
  } else {
    j["eta_coefficients"] = json::array();
    for (int k = 0; k <= rep.eta_degree(); ++k) {
      j["eta_coefficients"].push_back(rationals(rep.coefficient(k)));
      os << "eta^" << k << ": " << rep.coefficient(k).str("mu") << "\n";
    }
  }
  emit(g, j, os.str());
  return lq;
}

int cmd_qpoly(const Globals& g, const Target& t, int m, int k, bool unnormalized) {
  const auto spec = resolve(g, t);
  hua::MuPoly q;
  std::string label = "q_" + std::to_string(m);
  if (k == 0) {
    q = hua::q_poly(spec, m);
  } else if (unnormalized) {
    q = hua::derivative_at_half(spec, m, k);
    label = "d^" + std::to_string(k) + "P/deta^" + std::to_string(k) + "(1/2)";
  } else {
    q = hua::normalized_derivative_at_half(spec, m, k);
    label += "^" + std::to_string(k);
  }
  json j = spec_json(spec);
  j["m"] = m;
  j["order"] = k;
  j["normalized"] = k > 0 && !unnormalized;
  j["coefficients"] = rationals(q);
  emit(g, j, label + "(mu) = " + q.str("mu") + "\n");
  return lq;
}

int cmd_decide(const Globals& g, const Target& t, int m, const std::string& mu_text, bool count) {
  const auto spec = resolve(g, t);
  const auto mu = hua::Rational::parse(mu_text);
  hua::Verdict v = hua::decide(spec, m, mu);
  if (count && !v.boundary) v.right_halfplane_root_count = hua::halfplane_root_count(spec, m, mu).count;
  json j = spec_json(spec);
  j["m"] = m;
  j["mu"] = mu.str();
  j["is_lu_qikeng"] = v.is_lu_qikeng;
  j["boundary"] = v.boundary;
  j["root_on_line"] = v.root_on_line;
  j["right_halfplane_root_count"] = v.right_halfplane_root_count;
  j["method"] = v.method;
  j["trace"] = json::array();
  std::ostringstream os;
  os << (v.is_lu_qikeng ? "Lu Qikeng" : "not Lu Qikeng") << (v.boundary ? " (boundary: q_m(mu) = 0)" : "") << "\n"
     << "method: " << v.method << "\n";
  for (const auto& nv : v.trace) {
    j["trace"].push_back({{"name", nv.name}, {"value", nv.value.str()}});
    os << "  " << nv.name << " = " << nv.value.str() << "\n";
  }
  if (v.right_halfplane_root_count >= 0) os << "roots with Re eta > 1/2: " << v.right_halfplane_root_count << "\n";
  emit(g, j, os.str());
  if (v.boundary) return boundary;
  return v.is_lu_qikeng ? lq : not_lq;
}

int cmd_threshold(const Globals& g, const Target& t, int m) {
  const auto spec = resolve(g, t);
  const auto tol = tolerance(g);
  const auto rep = hua::threshold(spec, m, tol);
  json j = spec_json(spec);
  j["m"] = m;
  j["mu_m_1"] = root_json(rep.mu_m_1, tol);
  j["mu_m_2"] = root_json(rep.mu_m_2, tol);
  j["q"] = rationals(rep.q);
  j["positive_root_count"] = rep.positive_root_count;
  j["verified_sufficient"] = rep.verified_sufficient;
  j["proven"] = rep.proven;
  j["all_roots"] = json::array();
  for (const auto& r : rep.all_roots) j["all_roots"].push_back(root_json(r, tol));
  std::ostringstream os;
  os << "q_" << m << "(mu) = " << rep.q.str("mu") << "\n"
     << "mu_{" << m << ",1} = " << root_text(rep.mu_m_1, tol) << "\n"
     << "mu_{" << m << ",2} = " << root_text(rep.mu_m_2, tol) << "\n"
     << "positive roots: " << rep.positive_root_count << ", tolerance " << tol.str() << "\n"
     << "verified on both sides: " << (rep.verified_sufficient ? "yes" : "no")
     << ", proven range: " << (rep.proven ? "yes" : "no") << "\n";
  emit(g, j, os.str());
  return lq;
}

int cmd_momega(const Globals& g, const Target& t, int window, int cap) {
  const auto spec = resolve(g, t);
  const auto rep = hua::m_omega(spec, window, cap);
  json j = spec_json(spec);
  j["m_omega"] = rep.m_omega;
  j["proven"] = rep.proven;
  j["q_positivity_proven"] = rep.q_positivity_proven;
  j["certificate_from"] = rep.certificate_from ? json(*rep.certificate_from) : json(nullptr);
  j["window"] = window;
  j["cap"] = cap;
  std::ostringstream os;
  os << "m_Omega = " << rep.m_omega;
  if (rep.m_omega == 1) os << " (Lu Qikeng for every m >= 1 and every mu > 0)";
  os << "\nproven range: " << (rep.proven ? "yes" : "no") << ", coefficient certificate: "
     << (rep.certificate_from ? "from m = " + std::to_string(*rep.certificate_from) : std::string("none")) << "\n";
  emit(g, j, os.str());
  return lq;
}

int cmd_rootcount(const Globals& g, const Target& t, int m, const std::string& mu_text) {
  const auto spec = resolve(g, t);
  const auto mu = hua::Rational::parse(mu_text);
  const double tol = tolerance(g).to_double();
  const auto c = hua::halfplane_root_count(spec, m, mu, tol);
  json j = spec_json(spec);
  j["m"] = m;
  j["mu"] = mu.str();
  j["count"] = c.count;
  j["ambiguous"] = c.ambiguous;
  j["real_count"] = c.real_count;
  j["all_real"] = c.all_real;
  j["max_abs_imag"] = c.max_abs_imag;
  j["roots"] = json::array();
  std::ostringstream os;
  os << "roots with Re eta > 1/2: " << c.count << (c.ambiguous ? " (+" + std::to_string(c.ambiguous) + " ambiguous)" : "")
     << "\nall real: " << (c.all_real ? "yes" : "no") << " (max |Im| " << c.max_abs_imag << ")\nroots:\n";
  for (const auto& r : c.roots) {
    j["roots"].push_back({r.real(), r.imag()});
    os << "  " << std::setprecision(12) << r.real() << (r.imag() < 0 ? " - " : " + ") << std::abs(r.imag()) << "i\n";
  }
  emit(g, j, os.str());
  return lq;
}

hua::CVec parse_cvec(const std::string& text, int n, const std::string& what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw hua::Error(hua::Errc::parse_error, "bad number '" + item + "' in " + what);
    }
  }
  if (text.empty()) v.assign(static_cast<size_t>(2 * n), 0.0);
  if (static_cast<int>(v.size()) != 2 * n) {
    throw hua::Error(hua::Errc::parse_error, what + " needs " + std::to_string(2 * n) + " reals (re,im pairs)");
  }
  hua::CVec out;
  for (int i = 0; i < n; ++i) out.emplace_back(v[static_cast<size_t>(2 * i)], v[static_cast<size_t>(2 * i + 1)]);
  return out;
}

json complex_json(std::complex<double> c) { return {c.real(), c.imag()}; }

int cmd_kernel(const Globals& g, const Target& t, int m, const std::string& mu_text,
               const std::array<std::string, 4>& coords) {
  const auto spec = resolve(g, t);
  const auto mu = hua::Rational::parse(mu_text);
  const hua::HartogsPoint p{parse_cvec(coords[0], spec.d, "--z"), parse_cvec(coords[1], m, "--Z")};
  const hua::HartogsPoint q{parse_cvec(coords[2], spec.d, "--w"), parse_cvec(coords[3], m, "--W")};
  const hua::BergmanKernel kernel(spec, m, mu);
  const auto xe = hua::xi_eta(spec, mu.to_double(), p, q);
  const auto n = hua::generic_norm(spec, p.z, q.z);
  const auto k = kernel(p, q);
  json j = spec_json(spec);
  j["m"] = m;
  j["mu"] = mu.str();
  j["N"] = complex_json(n);
  j["xi"] = complex_json(xe.xi);
  j["eta"] = complex_json(xe.eta);
  j["kernel"] = complex_json(k);
  j["principal_branch_ok"] = xe.principal_branch_ok;
  std::ostringstream os;
  os << std::setprecision(15) << "N(z,w) = " << n << "\nxi = " << xe.xi << "\neta = " << xe.eta
     << "\nK / C = " << k << "\n";
  if (!xe.principal_branch_ok) os << "note: Re N(z,w) <= 0, powers of N taken on the branch continuous from w = 0\n";
  emit(g, j, os.str());
  return lq;
}

int cmd_verify(const Globals& g, const std::string& suite, long samples) {
  json j = json::array();
  std::ostringstream os;
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    all_ok = all_ok && ok;
    j.push_back({{"suite", name}, {"pass", ok}, {"detail", detail}});
    os << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
  };
  auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
  const long n = samples > 0 ? samples : 0;

  if (want("localization")) {
    const int cases = n ? static_cast<int>(n) : 2000;
    const auto s = hua::localization_vs_oracle(cases, g.seed);
    report("localization", s.oracle_agreements == s.cases && s.construction_agreements == s.cases &&
                               s.generic_agreements == s.cases,
           std::to_string(s.oracle_agreements) + "/" + std::to_string(s.cases) + " agree with numeric roots");
  }
  if (want("decide")) {
    const auto s = hua::decide_vs_numeric(n ? static_cast<int>(n) : 3, 7, g.seed);
    report("decide", s.failures.empty(),
           std::to_string(s.agreements) + "/" + std::to_string(s.samples) + " agree, " +
               std::to_string(s.near_threshold) + " within tolerance of a threshold");
  }
  if (want("mc")) {
    const auto e = hua::hua_integral_mc(2, 1.0, n ? n : 1000000, g.seed);
    const double z = std::abs(e.estimate - e.expected) / e.std_error;
    std::ostringstream d;
    d << "estimate " << e.estimate << " +/- " << e.std_error << ", exact " << e.expected << ", " << z << " sigma";
    report("mc", z < 4, d.str());
  }
  if (want("selberg")) {
    for (auto [a, b, r, s] : std::vector<std::tuple<int, int, int, double>>{{1, 0, 2, 0.0}, {2, 0, 2, 1.0}, {2, 1, 1, 1.0}}) {
      const auto c = hua::selberg_check(a, b, r, s);
      std::ostringstream d;
      d << "(" << a << "," << b << "," << r << ") s=" << s << ": quadrature " << std::setprecision(12) << c.quadrature
        << ", Gamma product " << c.expected << ", rel. dev " << c.relative_deviation;
      report("selberg", c.relative_deviation < 1e-6, d.str());
    }
  }
  if (want("range")) {
    const auto s = hua::range_lemma(hua::catalog_lookup("I_{1,2}"), 2, 1.5, n ? n : 100000, g.seed);
    std::ostringstream d;
    d << s.pairs << " pairs, max |xi| " << s.max_abs_xi << ", min Re eta " << s.min_re_eta;
    report("range", s.xi_violations == 0 && s.eta_violations == 0, d.str());
  }
  if (j.empty()) throw hua::Error(hua::Errc::parse_error, "unknown suite '" + suite + "'");
  emit(g, j, os.str());
  return all_ok ? 0 : not_lq;
}

int cmd_table(const Globals& g, bool all, bool csv) {
  const auto rep = hua::reproduce_table(hua::Rational(1, 1000000000000L));
  bool ok = true;
  json j = json::array();
  std::ostringstream os;
  if (csv) os << "type,m,index,printed,computed,deviation,closed_form,closed_deviation,match\n";
  for (const auto& row : rep.rows) {
    ok = ok && row.matches;
    if (!all && !row.cell.finite) continue;
    const std::string computed = row.computed.finite ? row.computed.value.decimal(10) : "+inf";
    std::ostringstream dev, cdev;
    dev << std::setprecision(3) << row.deviation;
    if (row.closed_deviation) cdev << std::setprecision(3) << row.closed_deviation->convert_to<double>();
    json r = {{"type", row.cell.type}, {"column", row.cell.column}, {"m", row.cell.m}, {"index", row.cell.index},
              {"printed", row.cell.printed}, {"computed", computed}, {"match", row.matches}};
    if (row.cell.finite) {
      r["reference"] = row.cell.value;
      r["deviation"] = row.deviation;
    }
    if (!row.cell.closed_form.empty()) r["closed_form"] = row.cell.closed_form;
    if (row.closed_deviation) r["closed_deviation"] = row.closed_deviation->convert_to<double>();
    if (!row.cell.note.empty()) r["note"] = row.cell.note;
    j.push_back(r);
    if (csv) {
      os << row.cell.type << "," << row.cell.m << "," << row.cell.index << ",\"" << row.cell.printed << "\","
         << computed << "," << (row.cell.finite ? dev.str() : "") << ",\"" << row.cell.closed_form << "\","
         << cdev.str() << "," << (row.matches ? "yes" : "no") << "\n";
    } else {
      os << std::left << std::setw(9) << row.cell.type << " mu_{" << row.cell.m << "," << row.cell.index << "}  "
         << std::setw(18) << row.cell.printed << " computed " << std::setw(14) << computed;
      if (row.cell.finite) os << " dev " << std::setw(9) << dev.str();
      if (row.closed_deviation) os << " closed-form dev " << cdev.str();
      os << (row.matches ? "  ok" : "  MISMATCH");
      if (!row.cell.note.empty()) os << "  [" << row.cell.note << "]";
      os << "\n";
    }
  }
  if (!csv) os << rep.matched << "/" << rep.finite_cells << " finite cells within " << rep.numeric_tolerance << "\n";
  if (g.json) {
    std::cout << json{{"cells", j}, {"finite_cells", rep.finite_cells}, {"matched", rep.matched},
                      {"numeric_tolerance", rep.numeric_tolerance},
                      {"closed_form_tolerance", rep.closed_form_tolerance}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << os.str();
  }
  return ok ? 0 : not_lq;
}

int exit_for(hua::Errc code) {
  switch (code) {
    case hua::Errc::boundary_mu: return boundary;
    case hua::Errc::internal_inconsistency:
    case hua::Errc::oracle_non_convergence:
    case hua::Errc::quadrature_budget_exceeded:
    case hua::Errc::search_limit_exceeded: return failure;
    default: return bad_input;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hua polynomials, Bergman kernels of Cartan-Hartogs domains and the Lu Qikeng property"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--tol", g.tol_text, "Tolerance for numeric refinement (decimal or p/q)")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--raw", g.raw, "Raw invariants a b r instead of a type name")->expected(3);

  Target t;
  int m = 1;
  int k = 0;
  int window = 8;
  int cap = 64;
  long samples = 0;
  bool unnormalized = false;
  bool count = false;
  bool all = false;
  bool csv = false;
  std::string mu_text;
  std::string suite = "all";
  std::array<std::string, 4> coords;

  auto with_type = [&](CLI::App* sub) { sub->add_option("type", t.type, "Domain type, e.g. I_{1,3}, IV_4, EV"); };
  auto* chi = app.add_subcommand("chi", "Hua polynomial chi(s)");
  with_type(chi);
  auto* dec = app.add_subcommand("decompose", "C_j(mu) in chi(k mu) = sum mu^j C_{d-j}(mu) (k+1)_j");
  with_type(dec);
  auto* poly = app.add_subcommand("poly", "Representative polynomial P_mu^m(eta)");
  with_type(poly);
  poly->add_option("--m", m, "Fiber dimension")->required();
  poly->add_option("--mu", mu_text, "Instantiate at this mu");
  auto* qp = app.add_subcommand("qpoly", "q_m(mu) = P_mu^m(1/2), or its eta-derivatives");
  with_type(qp);
  qp->add_option("--m", m, "Fiber dimension")->required();
  qp->add_option("--k", k, "Derivative order (0 for q_m itself)")->capture_default_str();
  qp->add_flag("--unnormalized", unnormalized, "Do not divide by (m+1)_k mu^k");
  auto* decide = app.add_subcommand("decide", "Lu Qikeng decision for rational mu");
  with_type(decide);
  decide->add_option("--m", m, "Fiber dimension")->required();
  decide->add_option("--mu", mu_text, "mu (decimal or p/q)")->required();
  decide->add_flag("--count", count, "Also count roots in Re eta > 1/2 numerically");
  auto* thr = app.add_subcommand("threshold", "Positive roots of q_m");
  with_type(thr);
  thr->add_option("--m", m, "Fiber dimension")->required();
  auto* mo = app.add_subcommand("momega", "Smallest m beyond which every mu gives a Lu Qikeng domain");
  with_type(mo);
  mo->add_option("--window", window, "Consecutive root-free q_m required")->capture_default_str();
  mo->add_option("--cap", cap, "Largest m searched")->capture_default_str();
  auto* rc = app.add_subcommand("rootcount", "Number of roots of P_mu^m in Re eta > 1/2");
  with_type(rc);
  rc->add_option("--m", m, "Fiber dimension")->required();
  rc->add_option("--mu", mu_text, "mu (decimal or p/q)")->required();
  auto* ke = app.add_subcommand("kernel-eval", "Bergman kernel (up to a constant) at a pair of points");
  with_type(ke);
  ke->add_option("--m", m, "Fiber dimension")->required();
  ke->add_option("--mu", mu_text, "mu (decimal or p/q)")->required();
  ke->add_option("--z", coords[0], "Base point z as re,im,re,im,...");
  ke->add_option("--Z", coords[1], "Fiber point Z");
  ke->add_option("--w", coords[2], "Base point w");
  ke->add_option("--W", coords[3], "Fiber point W");
  auto* ver = app.add_subcommand("verify", "Run the numeric cross-check suites");
  ver->add_option("--suite", suite, "localization, decide, mc, selberg, range or all")->capture_default_str();
  ver->add_option("--samples", samples, "Override the sample count of the chosen suites");
  auto* tab = app.add_subcommand("table", "Reproduce the threshold table for the bases of dimension 2 to 4");
  tab->add_flag("--all", all, "Include the +inf cells");
  tab->add_flag("--csv", csv, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bad_input;
  }

  try {
    if (*chi) return cmd_chi(g, t);
    if (*dec) return cmd_decompose(g, t);
    if (*poly) return cmd_poly(g, t, m, mu_text);
    if (*qp) return cmd_qpoly(g, t, m, k, unnormalized);
    if (*decide) return cmd_decide(g, t, m, mu_text, count);
    if (*thr) return cmd_threshold(g, t, m);
    if (*mo) return cmd_momega(g, t, window, cap);
    if (*rc) return cmd_rootcount(g, t, m, mu_text);
    if (*ke) return cmd_kernel(g, t, m, mu_text, coords);
    if (*ver) return cmd_verify(g, suite, samples);
    if (*tab) return cmd_table(g, all, csv);
  } catch (const hua::Error& e) {
    if (g.json) std::cout << json{{"error", std::string(hua::errc_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
  return bad_input;
}
