#include "chernkit_tools/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>

#include "chernkit/analysis.hpp"
#include "chernkit/catalog.hpp"
#include "chernkit/conformal.hpp"
#include "chernkit/frame.hpp"
#include "chernkit/mixed.hpp"
#include "chernkit/random.hpp"
#include "chernkit/surface.hpp"

namespace chernkit::tools {

int VerifySummary::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"all", "core", "conformal", "surface", "mixed", "catalog"};
  return suites;
}

namespace {

std::string point_string(const Point& p) {
  std::string s = "(";
  char buf[64];
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.6g%+.6gi", i ? ", " : "", p[i].real(), p[i].imag());
    s += buf;
  }
  return s + ")";
}

struct Worst {
  double value = 0.0;
  Point at;

  void update(double r, const Point& p) {
    if (r > value || at.empty()) {
      value = std::max(value, r);
      at = p;
    }
  }
};

struct Metric {
  CatalogEntry entry;
  std::unique_ptr<SymbolicJet> jet;
};

class Battery {
 public:
  explicit Battery(std::optional<double> tol) : override_(tol) {}

  void add(std::string id, std::string suite, std::string metric, const Point& at, double residual, double tol,
           Origin origin) {
    VerificationOutcome c;
    c.id = std::move(id);
    c.suite = std::move(suite);
    c.metric = std::move(metric);
    c.point = at.empty() ? "" : point_string(at);
    c.residual = residual;
    c.tolerance = override_.value_or(tol);
    c.pass = residual <= c.tolerance;  // NaN fails
    c.origin = std::string(to_string(origin));
    checks_.push_back(std::move(c));
  }
  void add(std::string id, std::string suite, std::string metric, const Worst& w, double tol, Origin origin) {
    add(std::move(id), std::move(suite), std::move(metric), w.at, w.value, tol, origin);
  }

  const Metric& metric(const std::string& name) {
    auto it = cache_.find(name);
    if (it == cache_.end()) {
      Metric m{builtin(name), nullptr};
      m.jet = std::make_unique<SymbolicJet>(m.entry.spec);
      it = cache_.emplace(name, std::move(m)).first;
    }
    return it->second;
  }

  std::vector<VerificationOutcome> take() { return std::move(checks_); }

 private:
  std::optional<double> override_;
  std::vector<VerificationOutcome> checks_;
  std::map<std::string, Metric> cache_;
};

Matrix identity(int n) { return Matrix::Identity(n, n); }

const std::vector<std::string> kSurfaces{"euclidean-2", "fubini-study-2", "complex-hyperbolic-2",
                                         "hopf-2",      "adm-product-surface", "isosceles-hopf-surface"};

const std::vector<std::pair<double, double>> kPairs{{1.0, 0.0}, {0.0, 1.0}, {1.0, -2.0}, {2.0, 1.0}, {-0.5, 1.5}};

const std::vector<std::string> kFactors{"0.1*(z1*zbar1 - z2*zbar2)", "0.05*z1*zbar1", "0.2*log(1 + abs2(z))"};

// ---------------------------------------------------------------- core

void core_suite(Battery& b) {
  for (const std::string& name : catalog_names()) {
    const Metric& m = b.metric(name);
    const auto points = sample_points(m.entry, 20, 11);
    std::vector<Worst> per(m.entry.expected.size());
    Worst asym;
    for (const Point& p : points) {
      const PointAnalysis a = analyze(*m.jet, p);
      for (std::size_t k = 0; k < per.size(); ++k)
        per[k].update(std::abs(quantity(a, m.entry.expected[k].quantity) - m.entry.expected[k].value), p);
      asym.update(hermitian_asymmetry(a.coordinate), p);
    }
    for (std::size_t k = 0; k < per.size(); ++k) {
      const Expected& e = m.entry.expected[k];
      b.add("core.expected." + e.quantity, "core", name, per[k], e.tolerance, e.origin);
    }
    b.add("core.hermitian-symmetry", "core", name, asym, 1e-12, Origin::Derived);

    Worst fd;
    for (const Point& p : sample_points(m.entry, 5, 12))
      for (const Expr& e : m.entry.spec.entries)
        if (!e.is_constant()) fd.update(fd_residual(e, p), p);
    b.add("core.symbolic-vs-fd", "core", name, fd, 1e-6, Origin::Derived);

    Worst kahler;
    if (m.entry.kahler) {
      for (const Point& p : points) kahler.update(kahler_defect(m.jet->at(p)), p);
      b.add("core.kahler-defect", "core", name, kahler, 1e-10, Origin::Trivial);
    }
  }

  for (int n : {2, 3}) {
    const std::string name = "hopf-" + std::to_string(n);
    const Metric& m = b.metric(name);
    Worst tensor;
    Worst torsion_gap;
    Worst non_kahler;
    non_kahler.value = 0.0;
    for (const Point& p : sample_points(m.entry, 50, 13)) {
      const PointAnalysis a = analyze(*m.jet, p);
      double r = 0.0;
      for (const Complex& z : p) r += std::norm(z);
      double worst = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Complex sub = std::conj(p[static_cast<std::size_t>(i)]) * p[static_cast<std::size_t>(j)] / r;
          const Complex rho = static_cast<double>(n) * ((i == j ? 1.0 : 0.0) - sub);
          worst = std::max(worst, std::abs(a.ricci.rho1(i, j) - rho));
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              const Complex expected = (k == l) ? (i == j ? 1.0 : 0.0) - sub : Complex{};
              worst = std::max(worst, std::abs(a.unitary.R(i, j, k, l) - expected));
            }
        }
      tensor.update(worst, p);
      torsion_gap.update(std::max(std::abs(a.ricci.u - a.ricci.v - a.torsion.eta_norm2),
                                  std::abs(a.torsion.eta_norm2 - (n - 1.0) * (n - 1.0))),
                         p);
      if (std::abs(std::sqrt(r) - 1.0) < 0.25) non_kahler.update(std::max(0.0, 0.1 - a.kahler_defect), p);
    }
    b.add("core.hopf-closed-form", "core", name, tensor, 1e-10, Origin::ClosedForm);
    b.add("core.hopf-torsion", "core", name, torsion_gap, 1e-9, Origin::Derived);
    b.add("core.non-kahler", "core", name, non_kahler, 0.0, Origin::Derived);
  }

  for (int n = 1; n <= 4; ++n) {
    const std::string name = "euclidean-" + std::to_string(n);
    const Metric& m = b.metric(name);
    Worst w;
    for (const Point& p : sample_points(m.entry, 10, 14)) {
      const PointAnalysis a = analyze(*m.jet, p);
      double r = std::max({a.coordinate.R.max_abs(), a.torsion.T.max_abs(), std::abs(a.ricci.u), std::abs(a.ricci.v)});
      const ExtremumReport e = extremize(a.unitary, identity(n), MixedParams(1.0, 1.0));
      r = std::max({r, std::abs(e.min_value), std::abs(e.max_value)});
      if (n == 2) r = std::max(r, weyl_minus(a.unitary).max_abs());
      w.update(r, p);
    }
    b.add("core.flat-zero", "core", name, w, 1e-12, Origin::Trivial);
  }
}

// ---------------------------------------------------------------- mixed

void mixed_suite(Battery& b) {
  for (int n : {2, 3, 4}) {
    const std::string name = "hopf-" + std::to_string(n);
    const Metric& m = b.metric(name);
    const MixedParams params(1.0, -n);
    Rng rng(Rng::split(21, static_cast<std::uint64_t>(n)));
    Worst value;
    Worst tensor;
    Worst trace;
    Worst spread;
    const auto points = sample_points(m.entry, 100, 22);
    for (std::size_t s = 0; s < points.size(); ++s) {
      const Point& p = points[s];
      const MetricJet jet = m.jet->at(p);
      const ChernCurvature Rc = chern_curvature(jet);
      Vector X(n);
      for (int i = 0; i < n; ++i) X(i) = rng.complex_normal();
      value.update(std::abs(mixed_curvature(Rc, jet.g, params, X)), p);
      if (s < 20) {
        const ChernCurvature U = to_unitary_frame(Rc, jet);
        tensor.update(constancy_tensor_residual(U, identity(n), params, 0.0), p);
        trace.update(trace_identity_residual(ricci_bundle(U, identity(n)), identity(n), params, 0.0), p);
        spread.update(extremize(U, identity(n), params).spread, p);
      }
    }
    b.add("mixed.hopf-vanishing", "mixed", name, value, 1e-10, Origin::ClosedForm);
    b.add("mixed.constancy-tensor", "mixed", name, tensor, 1e-10, Origin::ClosedForm);
    b.add("mixed.trace-identity", "mixed", name, trace, 1e-8, Origin::ClosedForm);
    b.add("mixed.constant-spread", "mixed", name, spread, 1e-8, Origin::ClosedForm);
  }

  for (const char* family : {"fubini-study", "complex-hyperbolic"}) {
    for (int n : {2, 3}) {
      const std::string name = std::string(family) + "-" + std::to_string(n);
      const Metric& m = b.metric(name);
      const MixedParams params(0.0, 1.0);
      Worst spread;
      Worst tensor;
      Worst trace;
      double lo = 1e300;
      double hi = -1e300;
      for (const Point& p : sample_points(m.entry, 10, 23)) {
        const PointAnalysis a = analyze(*m.jet, p);
        const ExtremumReport e = extremize(a.unitary, identity(n), params);
        const double c = 0.5 * (e.min_value + e.max_value);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
        spread.update(e.spread, p);
        tensor.update(constancy_tensor_residual(a.unitary, identity(n), params, c), p);
        trace.update(trace_identity_residual(a.ricci, identity(n), params, c), p);
      }
      b.add("mixed.constant-spread", "mixed", name, spread, 1e-8, Origin::Derived);
      b.add("mixed.constant-across-points", "mixed", name, {}, hi - lo, 1e-8, Origin::Derived);
      b.add("mixed.constancy-tensor", "mixed", name, tensor, 1e-8, Origin::Derived);
      b.add("mixed.trace-identity", "mixed", name, trace, 1e-8, Origin::Derived);
    }
  }

  {
    const Metric& m = b.metric("hopf-2");
    const Point p{Complex(1.0, 0.0), Complex(0.0, 0.0)};
    const PointAnalysis a = analyze(*m.jet, p);
    const ExtremumReport e = extremize(a.unitary, identity(2), MixedParams(0.0, 1.0));
    b.add("mixed.non-constant-witness", "mixed", "hopf-2", p, std::max(0.0, 1e-2 - e.spread), 0.0, Origin::Derived);
  }

  std::size_t k = 0;
  for (const std::string& name : catalog_names()) {
    const Metric& m = b.metric(name);
    const Point p = sample_points(m.entry, 1, 24).front();
    const PointAnalysis a = analyze(*m.jet, p);
    const int n = a.jet.dim();
    const auto [alpha, beta] = kPairs[k++ % kPairs.size()];
    const MixedParams params(alpha, beta);
    const double closed = sphere_average_closed_form(a.ricci, params, n);
    const MonteCarloEstimate mc = sphere_average_monte_carlo(a.unitary, identity(n), params, {100000, 25, 1});
    const double band = 3.0 * mc.standard_error + 1e-12 * (1.0 + std::abs(closed));
    b.add("mixed.sphere-average", "mixed", name, p, std::abs(mc.mean - closed) / band, 1.0, Origin::Derived);
  }

  {
    const Metric& m = b.metric("fubini-study-3");
    Worst linear;
    Worst scale;
    Rng rng(26);
    for (const Point& p : sample_points(m.entry, 10, 27)) {
      const MetricJet jet = m.jet->at(p);
      const ChernCurvature Rc = chern_curvature(jet);
      Vector X(3);
      for (int i = 0; i < 3; ++i) X(i) = rng.complex_normal();
      const double c1 = mixed_curvature(Rc, jet.g, MixedParams(1.0, 0.5), X);
      const double c2 = mixed_curvature(Rc, jet.g, MixedParams(-0.3, 2.0), X);
      const double c12 = mixed_curvature(Rc, jet.g, MixedParams(0.7, 2.5), X);
      linear.update(std::abs(c12 - c1 - c2) / std::max(1.0, std::abs(c12)), p);
      const double cs = mixed_curvature(Rc, jet.g, MixedParams(1.0, 0.5), Complex(0.0, -3.7) * X);
      scale.update(std::abs(cs - c1) / std::max(1.0, std::abs(c1)), p);
    }
    b.add("mixed.parameter-linearity", "mixed", "fubini-study-3", linear, 1e-12, Origin::Trivial);
    b.add("mixed.scale-invariance", "mixed", "fubini-study-3", scale, 1e-10, Origin::Trivial);
  }
}

// ---------------------------------------------------------------- conformal

void conformal_suite(Battery& b) {
  for (const std::string& name : {std::string("fubini-study-2"), std::string("hopf-2"), std::string("adm-product-surface")}) {
    const Metric& m = b.metric(name);
    for (const std::string& text : kFactors) {
      const Expr F = parse_expression(text, 2);
      const ConformalFactor factor(F, 2);
      const SymbolicJet tilde(conformal_metric(m.entry.spec, F));
      Worst law;
      Worst scalars;
      Worst ricci;
      Worst fd;
      for (const Point& p : sample_points(m.entry, 10, 31)) {
        const MetricJet jet = m.jet->at(p);
        const FactorJet fj = factor.at(p);
        const ChernCurvature Rc = chern_curvature(jet);
        const MetricJet tj = tilde.at(p);
        const ChernCurvature direct = chern_curvature(tj);
        const ChernCurvature predicted = conformal_curvature_via_formula(Rc, jet, fj);
        law.update(max_abs_difference(direct.R, predicted.R) / std::max(1.0, direct.R.max_abs()), p);
        const ScalarRelationResidual s = surface_scalar_relation_residual(*m.jet, tilde, factor, p);
        scalars.update(std::max(s.r_u, s.r_v), p);
        const Matrix rho_tilde = ricci_bundle(direct, tj.g).rho1;
        const Matrix rho = ricci_bundle(Rc, jet.g).rho1;
        ricci.update(max_abs(rho_tilde - (rho - 4.0 * fj.hess)) / std::max(1.0, max_abs(rho_tilde)), p);
        fd.update(fd_residual(F, p), p);
      }
      const std::string label = name + " F=" + text;
      b.add("conformal.transformation-law", "conformal", label, law, 1e-8, Origin::Derived);
      b.add("conformal.scalar-relations", "conformal", label, scalars, 1e-8, Origin::Derived);
      b.add("conformal.ricci-trace", "conformal", label, ricci, 1e-8, Origin::Derived);
      b.add("conformal.factor-fd", "conformal", label, fd, 1e-6, Origin::Derived);
    }
  }

  {
    const Metric& flat = b.metric("euclidean-2");
    const Metric& hopf = b.metric("hopf-2");
    const Expr F = parse_expression("-0.5*log(abs2(z))", 2);
    const ConformalFactor factor(F, 2);
    const SymbolicJet image(conformal_metric(flat.entry.spec, F));
    Worst metric;
    Worst constancy;
    for (const Point& p : sample_points(hopf.entry, 10, 32)) {
      metric.update(max_abs(image.metric(p) - hopf.jet->metric(p)), p);
      const MetricJet jet = flat.jet->at(p);
      constancy.update(conformal_constancy_residual(jet, chern_curvature(jet), factor.at(p), MixedParams(1.0, -2.0), 0.0), p);
    }
    b.add("conformal.flat-to-hopf-metric", "conformal", "euclidean-2", metric, 1e-12, Origin::ClosedForm);
    b.add("conformal.flat-to-hopf-constancy", "conformal", "euclidean-2", constancy, 1e-8, Origin::ClosedForm);
  }

  {
    const Metric& m = b.metric("adm-product-surface");
    const ConformalFactor zero(Expr(0.0), 2);
    Worst degenerate;
    Worst adm;
    for (const Point& p : sample_points(m.entry, 10, 33)) {
      const PointAnalysis a = analyze(*m.jet, p);
      const FactorJet fj = zero.at(p);
      const MixedParams params(1.0, -1.0);
      const double via = conformal_constancy_residual(a.jet, a.unitary, fj, MixedParams(2.0, 1.0), 0.5);
      const double direct = constancy_tensor_residual(a.unitary, identity(2), MixedParams(2.0, 1.0), 0.5);
      degenerate.update(std::abs(via - direct), p);
      adm.update(conformal_constancy_residual(a.jet, a.unitary, fj, params, 0.0), p);
    }
    b.add("conformal.zero-factor-degeneration", "conformal", "adm-product-surface", degenerate, 1e-12, Origin::Trivial);
    b.add("conformal.adm-constancy", "conformal", "adm-product-surface", adm, 1e-9, Origin::ClosedForm);
  }
}

// ---------------------------------------------------------------- surface

void surface_suite(Battery& b) {
  for (const std::string& name : kSurfaces) {
    const Metric& m = b.metric(name);
    Worst weyl;
    Worst combination;
    Worst c1;
    for (const Point& p : sample_points(m.entry, 50, 41)) {
      const PointAnalysis a = analyze(*m.jet, p);
      weyl.update(weyl_minus(a.unitary).max_abs(), p);
      combination.update(ricci_combination_residual(a.ricci, identity(2)), p);
      c1.update(c1_squared_pointwise_residual(a.ricci, identity(2)), p);
    }
    b.add("surface.weyl-minus", "surface", name, weyl, 1e-8, Origin::Derived);
    b.add("surface.ricci-combination", "surface", name, combination, 1e-8, Origin::Derived);
    b.add("surface.c1-squared", "surface", name, c1, 1e-8, Origin::Derived);
  }
  const Matrix g = (Matrix(2, 2) << 2.0, Complex(0.3, 0.4), Complex(0.3, -0.4), 1.5).finished();
  b.add("surface.c1-squared-fixture", "surface", "synthetic", {}, c1_squared_pointwise_residual(OneOneForm(g), g),
        1e-14, Origin::Trivial);
}

// ---------------------------------------------------------------- catalog

void catalog_suite(Battery& b) {
  for (const std::string& name : catalog_names()) {
    const Metric& m = b.metric(name);
    const auto first = sample_points(m.entry, 25, 51);
    const auto again = sample_points(m.entry, 25, 51);
    b.add("catalog.deterministic-samples", "catalog", name, {}, first == again ? 0.0 : 1.0, 0.0, Origin::Trivial);
    double outside = 0.0;
    for (const Point& p : first) outside += m.entry.spec.domain.contains(p) ? 0.0 : 1.0;
    b.add("catalog.samples-in-domain", "catalog", name, {}, outside, 0.0, Origin::Trivial);
    const SymbolicJet reparsed(parse_metric(to_dsl(m.entry.spec)));
    Worst roundtrip;
    for (const Point& p : sample_points(m.entry, 5, 52))
      roundtrip.update(max_abs(reparsed.metric(p) - m.jet->metric(p)) / std::max(1.0, max_abs(m.jet->metric(p))), p);
    b.add("catalog.dsl-roundtrip", "catalog", name, roundtrip, 1e-15, Origin::Trivial);
  }
}

}  // namespace

VerifySummary run_verify(std::string_view suite, std::optional<double> tolerance) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  if (tolerance && !(*tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto start = std::chrono::steady_clock::now();
  Battery b(tolerance);
  const bool all = suite == "all";
  if (all || suite == "core") core_suite(b);
  if (all || suite == "mixed") mixed_suite(b);
  if (all || suite == "conformal") conformal_suite(b);
  if (all || suite == "surface") surface_suite(b);
  if (all || suite == "catalog") catalog_suite(b);
  VerifySummary out;
  out.checks = b.take();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

void print_summary(const VerifySummary& summary, std::ostream& out) {
  char line[512];
  std::snprintf(line, sizeof line, "%-4s %-36s %-50s %12s %10s  %s\n", "", "check", "metric", "residual", "tolerance",
                "origin");
  out << line;
  for (const VerificationOutcome& c : summary.checks) {
    std::snprintf(line, sizeof line, "%-4s %-36s %-50s %12.3e %10.1e  %s\n", c.pass ? "ok" : "FAIL", c.id.c_str(),
                  c.metric.c_str(), c.residual, c.tolerance, c.origin.c_str());
    out << line;
    if (!c.pass && !c.point.empty()) out << "       worst point " << c.point << "\n";
  }
  std::snprintf(line, sizeof line, "%zu checks, %d failed, %.2f s\n", summary.checks.size(), summary.failures(),
                summary.seconds);
  out << line;
}

}  // namespace chernkit::tools
