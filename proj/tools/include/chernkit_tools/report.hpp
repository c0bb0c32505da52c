#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chernkit/dsl.hpp"
#include "chernkit/mixed.hpp"

namespace chernkit::tools {

using Json = nlohmann::ordered_json;

/// Bad command-line input: unreadable files, malformed points, bad options.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReportConfig {
  std::string metric;             // catalog name or path to a DSL file
  std::vector<Point> points;      // explicit points; sampled when empty
  int count = 5;
  std::uint64_t seed = 1;
  std::vector<MixedParams> params;
  std::optional<std::string> conformal;  // DSL expression for F
  ExtremizeOptions extremize;
  int threads = 1;
};

struct LoadedMetric {
  MetricSpec spec;
  std::string label;
};

/// A readable file is parsed as DSL; anything else is looked up in the
/// catalog. ParseError propagates; unknown names become InputError.
LoadedMetric load_metric(const std::string& source);

/// Applies config.conformal, if any, to the loaded metric.
LoadedMetric resolve_metric(const ReportConfig& config);

/// Parses "a, b, ..." with each entry a constant DSL expression such as
/// 0.5, -0.2+0.1i or 1e-3i.
Point parse_point(const std::string& text, int n);

std::vector<Point> resolve_points(const ReportConfig& config, const MetricSpec& spec);

struct Report {
  Json document;
  int errors = 0;          // records that could not be evaluated
  int non_converged = 0;   // extremum reports with converged = false
};

/// Per-point curvature records with one extremum report per parameter pair.
Report run_eval(const ReportConfig& config);

/// Per-point, per-parameter extremum rows.
Report run_extremize(const ReportConfig& config);

/// Fixed-width table of a run_extremize document.
std::string extremize_table(const Json& document);

Json to_json(Complex z);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);

}  // namespace chernkit::tools
