#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chernkit/expr.hpp"

namespace chernkit {

/// Sampling region for a metric chart.
///
///   Ball      |z| <= outer
///   Annulus   inner <= |z| <= outer
///   Polydisc  |z_k| <= outer for every k
///   Product   one single-coordinate factor per coordinate, in order
struct Domain {
  enum class Kind { Ball, Annulus, Polydisc, Product };

  Kind kind = Kind::Ball;
  double inner = 0.0;
  double outer = 1.0;
  std::vector<Domain> factors;

  static Domain ball(double radius);
  static Domain annulus(double inner, double outer);
  static Domain polydisc(double radius);
  static Domain product(std::vector<Domain> factors);

  bool contains(std::span<const Complex> p) const;

  /// DSL form, e.g. "annulus 0.5 2" or "product ball 0.6; ball 2".
  std::string to_string() const;
};

/// Deterministic points of `domain` in C^n, by rejection from the bounding
/// box. Identical (domain, n, count, seed) give bit-identical output.
std::vector<Point> sample_domain(const Domain& domain, int n, int count, std::uint64_t seed);

}  // namespace chernkit
