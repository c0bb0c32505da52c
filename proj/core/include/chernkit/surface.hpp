#pragma once

// Identities specific to Hermitian surfaces (n = 2). Every function throws
// std::invalid_argument for other dimensions.

#include "chernkit/curvature.hpp"

namespace chernkit {

/// Anti-self-dual Weyl components in a unitary frame e_1, e_2:
///   w1 = R_{1 2bar 1 2bar}
///   w2 = (R_{1 2bar 2 2bar} + R_{2 2bar 1 2bar} - R_{1 2bar 1 1bar} - R_{1 1bar 1 2bar}) / sqrt2
///   w3 = (R_{1 1bar 1 1bar} + R_{2 2bar 2 2bar} - R_{1 1bar 2 2bar} - R_{2 2bar 1 1bar}
///         - R_{1 2bar 2 1bar} - R_{2 1bar 1 2bar}) / 6
/// They depend on the frame, which is carried along.
struct WeylMinus {
  Complex w1;
  Complex w2;
  Complex w3;
  Matrix frame;

  double max_abs() const { return std::max({std::abs(w1), std::abs(w2), std::abs(w3)}); }
};

/// Requires unitary-frame curvature.
WeylMinus weyl_minus(const ChernCurvature& Rc);

/// A (1,1)-form by its components a_{i jbar}.
struct OneOneForm {
  Matrix a;
  bool real = true;

  /// Throws std::invalid_argument if `real` and a is not Hermitian to 1e-10.
  OneOneForm(Matrix components, bool is_real = true);
};

/// Hermitian pairing g^{i kbar} g^{l jbar} a_{i jbar} conj(b_{k lbar}); <g, g> = n.
Complex form_inner(const Matrix& a, const Matrix& b, const Matrix& g);

/// (a ^ b) / (w ^ w) with w the Kahler form of g.
Complex wedge_ratio(const Matrix& a, const Matrix& b, const Matrix& g);

/// max |rho1 + rho2 - (rho3 + rho4) - (u - v) g|.
double ricci_combination_residual(const RicciBundle& bundle, const Matrix& g);

/// |rho1 ^ rho1 / (w ^ w) - (u^2 - <rho1, rho1>) / 2|.
double c1_squared_pointwise_residual(const RicciBundle& bundle, const Matrix& g);
/// Same identity for an arbitrary real (1,1)-form with u = trace.
double c1_squared_pointwise_residual(const OneOneForm& rho, const Matrix& g);

}  // namespace chernkit
