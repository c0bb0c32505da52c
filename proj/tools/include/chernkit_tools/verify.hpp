#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace chernkit::tools {

struct VerificationOutcome {
  std::string id;
  std::string suite;
  std::string metric;
  std::string point;  // worst point, empty for point-free checks
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string origin;  // closed-form | derived | trivial
};

struct VerifySummary {
  std::vector<VerificationOutcome> checks;
  double seconds = 0.0;

  int failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Suites: all, core, conformal, surface, mixed, catalog. When `tolerance`
/// is set it replaces every check's own tolerance.
/// Throws std::invalid_argument for an unknown suite.
VerifySummary run_verify(std::string_view suite, std::optional<double> tolerance = std::nullopt);

const std::vector<std::string>& verify_suites();

void print_summary(const VerifySummary& summary, std::ostream& out);

}  // namespace chernkit::tools
