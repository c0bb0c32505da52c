#pragma once

#include <span>
#include <string_view>

#include "chernkit/curvature.hpp"

namespace chernkit {

/// Everything computed at one point: the jet, curvature in both frames,
/// Ricci traces and scalars (unitary frame), torsion and the two Kahler tests.
struct PointAnalysis {
  MetricJet jet;
  ChernCurvature coordinate;
  ChernCurvature unitary;
  RicciBundle ricci;
  Torsion torsion;
  double kahler_defect = 0.0;
  double kahler_like_defect = 0.0;  // unitary frame
};

PointAnalysis analyze(const SymbolicJet& metric, std::span<const Complex> p);

/// Named scalar read off an analysis:
///   u, v, eta_norm2       scalars
///   H_e1                  holomorphic sectional curvature of the first frame vector
///   R_1111, R_2222        unitary components (real part)
///   rho1_11, rho1_22      unitary first Ricci, diagonal (real part)
///   rho1_12               |unitary first Ricci (1,2)|
/// Throws std::invalid_argument for unknown names or out-of-range indices.
double quantity(const PointAnalysis& a, std::string_view name);

}  // namespace chernkit
