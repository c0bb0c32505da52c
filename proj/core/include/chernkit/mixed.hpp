#pragma once

// Mixed curvature C_{a,b}(X) = a Ric(X, Xbar) / |X|^2 + b H(X), with Ric the
// first Chern Ricci form, and tools for detecting when it is constant in X.

#include <cstdint>

#include "chernkit/curvature.hpp"

namespace chernkit {

struct MixedParams {
  double alpha = 0.0;
  double beta = 0.0;

  MixedParams() = default;
  /// Throws std::invalid_argument when alpha = beta = 0.
  MixedParams(double a, double b);
};

/// The quartic Z -> alpha rho(Z, Zbar) + beta R(Z, Zbar, Z, Zbar) on the unit
/// sphere of a g-orthonormal frame, where it equals C_{alpha,beta}(Z).
class SphereQuartic {
 public:
  /// Rc and g must be in the same frame; the quartic is built in
  /// orthonormal_frame(g) relative to that frame.
  SphereQuartic(const ChernCurvature& Rc, const Matrix& g, MixedParams params);

  int dim() const { return R_.dim(); }
  const Tensor4& curvature() const { return R_; }
  const Matrix& ricci() const { return rho_; }
  MixedParams params() const { return params_; }

  double value(const Vector& Z) const;
  /// Euclidean gradient 2 df/dZbar, so that df = Re <gradient, dZ>.
  Vector gradient(const Vector& Z) const;

 private:
  Tensor4 R_;
  Matrix rho_;
  MixedParams params_;
};

/// C_{alpha,beta}(X) for X in the frame of Rc. Throws std::invalid_argument
/// for X = 0.
double mixed_curvature(const ChernCurvature& Rc, const Matrix& g, MixedParams params, const Vector& X);

/// Average over the unit sphere: [((n+1) alpha + beta) u + beta v] / (n (n+1)).
double sphere_average_closed_form(const RicciBundle& bundle, MixedParams params, int n);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  long samples = 0;
};

struct MonteCarloOptions {
  long samples = 100000;
  std::uint64_t seed = 1;
  int threads = 1;
};

/// Mean of C_{alpha,beta} over directions uniform on the g-unit sphere.
/// The result depends only on (samples, seed), not on the thread count.
/// Throws std::invalid_argument for fewer than 1000 samples.
MonteCarloEstimate sphere_average_monte_carlo(const ChernCurvature& Rc, const Matrix& g, MixedParams params,
                                              const MonteCarloOptions& options = {});

struct ExtremizeOptions {
  int restarts = 16;
  double tol = 1e-8;
  int max_iter = 20000;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct ExtremumReport {
  double min_value = 0.0;
  double max_value = 0.0;
  Vector argmin;  // unit vectors in the g-orthonormal frame
  Vector argmax;
  double spread = 0.0;
  int restarts_used = 0;
  bool converged = false;
  double min_gradient = 0.0;  // projected gradient norms at the two extremizers
  double max_gradient = 0.0;
};

/// Projected gradient ascent and descent on the unit sphere from random
/// starts plus frame axes and the bisectors (e_a + c e_b)/sqrt2, c in {1, -1, i, -i}.
/// Throws std::invalid_argument if restarts < 1.
ExtremumReport extremize(const ChernCurvature& Rc, const Matrix& g, MixedParams params,
                         const ExtremizeOptions& options = {});

/// Components of
///   alpha (Ric_{i jbar} g_{k lbar} + Ric_{k jbar} g_{i lbar} + Ric_{i lbar} g_{k jbar} + Ric_{k lbar} g_{i jbar})
///   + beta (R_{i jbar k lbar} + R_{k jbar i lbar} + R_{i lbar k jbar} + R_{k lbar i jbar})
///   - 2c (g_{i jbar} g_{k lbar} + g_{i lbar} g_{k jbar}),
/// which vanishes exactly when C_{alpha,beta} = c in every direction.
Tensor4 constancy_tensor(const ChernCurvature& Rc, const Matrix& g, MixedParams params, double c);

/// max |constancy_tensor(Rc, g, params, c)|.
double constancy_tensor_residual(const ChernCurvature& Rc, const Matrix& g, MixedParams params, double c);

/// Traced form of the constancy condition with constant value f:
///   [alpha (n+2) + beta] rho1 + beta rho2 + beta (rho3 + rho4) = [2 (n+1) f - alpha u] g
///   [alpha (n+1) + beta] u + beta v = n (n+1) f
/// Returns the larger of the two residuals. g is the metric in the bundle's frame.
double trace_identity_residual(const RicciBundle& bundle, const Matrix& g, MixedParams params, double f);

}  // namespace chernkit
