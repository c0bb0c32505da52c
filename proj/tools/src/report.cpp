#include "chernkit_tools/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "chernkit/analysis.hpp"
#include "chernkit/catalog.hpp"
#include "chernkit/conformal.hpp"
#include "chernkit/parallel.hpp"

namespace chernkit::tools {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

LoadedMetric load_metric(const std::string& source) {
  std::ifstream in(source);
  if (in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    LoadedMetric m{parse_metric(buffer.str()), ""};
    m.label = m.spec.name.empty() ? source : m.spec.name;
    return m;
  }
  try {
    CatalogEntry e = builtin(source);
    return {e.spec, e.name};
  } catch (const std::invalid_argument&) {
    throw InputError("'" + source + "' is neither a readable file nor a catalog metric");
  }
}

LoadedMetric resolve_metric(const ReportConfig& config) {
  LoadedMetric m = load_metric(config.metric);
  if (config.conformal) {
    const Expr F = parse_expression(*config.conformal, m.spec.n);
    m.spec = conformal_metric(m.spec, F);
    m.label += " * exp(2F)";
  }
  return m;
}

Point parse_point(const std::string& text, int n) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Expr e;
    try {
      e = parse_expression(item, std::max(n, 1));
    } catch (const ParseError& err) {
      throw InputError("bad coordinate '" + item + "': " + err.detail());
    }
    if (max_coordinate(e) > 0) throw InputError("point coordinates must be constants: '" + item + "'");
    p.push_back(evaluate(e, Point(static_cast<std::size_t>(std::max(n, 1)))));
  }
  if (static_cast<int>(p.size()) != n)
    throw InputError("point '" + text + "' has " + std::to_string(p.size()) + " coordinates, expected " +
                     std::to_string(n));
  return p;
}

std::vector<Point> resolve_points(const ReportConfig& config, const MetricSpec& spec) {
  if (!config.points.empty()) return config.points;
  if (config.count < 1) throw InputError("at least one point is required");
  return sample_domain(spec.domain, spec.n, config.count, config.seed);
}

namespace {

Json header(const char* command, const ReportConfig& config, const LoadedMetric& m, std::size_t points) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  doc["metric"] = m.label;
  doc["dim"] = m.spec.n;
  doc["domain"] = m.spec.domain.to_string();
  doc["conformal"] = config.conformal ? Json(*config.conformal) : Json(nullptr);
  doc["seed"] = config.seed;
  doc["points"] = points;
  Json params = Json::array();
  for (const MixedParams& p : config.params) params.push_back({{"alpha", p.alpha}, {"beta", p.beta}});
  doc["params"] = params;
  doc["extremize"] = {{"restarts", config.extremize.restarts},
                      {"tol", config.extremize.tol},
                      {"max_iter", config.extremize.max_iter}};
  return doc;
}

Json extremum_json(const MixedParams& p, const ExtremumReport& r) {
  return {{"alpha", p.alpha},     {"beta", p.beta},         {"min", r.min_value},
          {"max", r.max_value},   {"spread", r.spread},     {"argmin", to_json(r.argmin)},
          {"argmax", to_json(r.argmax)}, {"restarts_used", r.restarts_used}, {"converged", r.converged}};
}

struct Evaluated {
  Json record;
  bool error = false;
  int non_converged = 0;
};

template <class Body>
Report sweep(const char* command, const ReportConfig& config, Body body) {
  const LoadedMetric m = resolve_metric(config);
  const std::vector<Point> points = resolve_points(config, m.spec);
  for (const Point& p : points) {
    if (static_cast<int>(p.size()) != m.spec.n)
      throw InputError("point dimension " + std::to_string(p.size()) + " does not match metric dimension " +
                       std::to_string(m.spec.n));
  }
  const SymbolicJet jet(m.spec);
  std::vector<Evaluated> results(points.size());
  parallel_for(points.size(), config.threads, [&](std::size_t i) {
    Evaluated& out = results[i];
    out.record["index"] = i;
    out.record["point"] = to_json(Vector(Eigen::Map<const Vector>(points[i].data(), static_cast<Eigen::Index>(points[i].size()))));
    try {
      if (!m.spec.domain.contains(points[i])) throw DomainError("point lies outside the domain " + m.spec.domain.to_string());
      out.record["status"] = "ok";
      out.non_converged = body(jet, points[i], out.record);
    } catch (const std::exception& e) {
      out.error = true;
      out.record["status"] = "error";
      out.record["error"] = e.what();
    }
  });
  Report report;
  report.document = header(command, config, m, points.size());
  Json records = Json::array();
  for (Evaluated& r : results) {
    report.errors += r.error ? 1 : 0;
    report.non_converged += r.non_converged;
    records.push_back(std::move(r.record));
  }
  report.document["records"] = std::move(records);
  report.document["summary"] = {{"records", points.size()}, {"errors", report.errors}, {"non_converged", report.non_converged}};
  return report;
}

}  // namespace

Report run_eval(const ReportConfig& config) {
  return sweep("eval", config, [&](const SymbolicJet& jet, const Point& p, Json& rec) {
    const PointAnalysis a = analyze(jet, p);
    const int n = a.jet.dim();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (a.jet.g + a.jet.g.adjoint()), Eigen::EigenvaluesOnly);
    rec["g_eigenvalues"] = std::vector<double>(eig.eigenvalues().data(), eig.eigenvalues().data() + n);
    rec["kahler_defect"] = a.kahler_defect;
    rec["kahler_like_defect"] = a.kahler_like_defect;
    rec["u"] = a.ricci.u;
    rec["v"] = a.ricci.v;
    rec["eta_norm2"] = a.torsion.eta_norm2;
    rec["ricci"] = {{"frame", "unitary"},
                    {"rho1", to_json(a.ricci.rho1)},
                    {"rho2", to_json(a.ricci.rho2)},
                    {"rho3", to_json(a.ricci.rho3)},
                    {"rho4", to_json(a.ricci.rho4)}};
    const Matrix I = Matrix::Identity(n, n);
    Json mixed = Json::array();
    int non_converged = 0;
    for (const MixedParams& params : config.params) {
      const ExtremumReport r = extremize(a.unitary, I, params, config.extremize);
      Json entry = extremum_json(params, r);
      entry["sphere_average"] = sphere_average_closed_form(a.ricci, params, n);
      mixed.push_back(std::move(entry));
      non_converged += r.converged ? 0 : 1;
    }
    rec["mixed"] = std::move(mixed);
    return non_converged;
  });
}

Report run_extremize(const ReportConfig& config) {
  if (config.params.empty()) throw InputError("extremize needs at least one --alpha/--beta pair");
  return sweep("extremize", config, [&](const SymbolicJet& jet, const Point& p, Json& rec) {
    const MetricJet mj = jet.at(p);
    const ChernCurvature Rc = chern_curvature(mj);
    Json rows = Json::array();
    int non_converged = 0;
    for (const MixedParams& params : config.params) {
      const ExtremumReport r = extremize(Rc, mj.g, params, config.extremize);
      rows.push_back(extremum_json(params, r));
      non_converged += r.converged ? 0 : 1;
    }
    rec["extrema"] = std::move(rows);
    return non_converged;
  });
}

std::string extremize_table(const Json& doc) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%5s %9s %9s %22s %22s %12s %s\n", "point", "alpha", "beta", "min", "max", "spread",
                "converged");
  out += line;
  for (const Json& rec : doc.at("records")) {
    const std::size_t index = rec.at("index").get<std::size_t>();
    if (rec.at("status") != "ok") {
      std::snprintf(line, sizeof line, "%5zu  error: %s\n", index, rec.at("error").get<std::string>().c_str());
      out += line;
      continue;
    }
    for (const Json& row : rec.at("extrema")) {
      std::snprintf(line, sizeof line, "%5zu %9.4g %9.4g %22.15g %22.15g %12.3e %s\n", index, row.at("alpha").get<double>(),
                    row.at("beta").get<double>(), row.at("min").get<double>(), row.at("max").get<double>(),
                    row.at("spread").get<double>(), row.at("converged").get<bool>() ? "yes" : "NO");
      out += line;
    }
  }
  return out;
}

}  // namespace chernkit::tools
