#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chernkit/dsl.hpp"

namespace chernkit {

enum class Origin { ClosedForm, Derived, Trivial };

std::string_view to_string(Origin origin);

/// A value every sampled point should reproduce; `quantity` is a name
/// understood by quantity() in analysis.hpp.
struct Expected {
  std::string quantity;
  double value = 0.0;
  double tolerance = 1e-9;
  Origin origin = Origin::Derived;
};

struct CatalogEntry {
  std::string name;
  std::string source;  // DSL text
  MetricSpec spec;
  std::vector<Expected> expected;
  bool kahler = false;
  std::string notes;
};

/// Names: euclidean-N, fubini-study-N, complex-hyperbolic-N, hopf-N for
/// N = 1..4, adm-product-surface, isosceles-hopf-surface.
/// Throws std::invalid_argument for anything else.
CatalogEntry builtin(std::string_view name);

std::vector<std::string> catalog_names();

/// The DSL text of an entry, as shipped in data/metrics.
std::string catalog_source(std::string_view name);

std::vector<Point> sample_points(const CatalogEntry& entry, int count, std::uint64_t seed);

}  // namespace chernkit
