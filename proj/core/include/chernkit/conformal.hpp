#pragma once

// Conformal changes g~ = exp(2F) g with F real:
//
//   R~_{i jbar k lbar} = exp(2F) (R_{i jbar k lbar} - 2 g_{k lbar} F_{i jbar}),
//   F_{i jbar} = d_i d_jbar F.

#include <span>
#include <utility>

#include "chernkit/mixed.hpp"
#include "chernkit/program.hpp"

namespace chernkit {

/// exp(2F) g_{i jbar}, entrywise and symbolic. Domain and name are kept.
MetricSpec conformal_metric(const MetricSpec& spec, const Expr& F);

struct FactorJet {
  double value = 0.0;
  Vector d;     // d_k F
  Vector dbar;  // d_kbar F
  Matrix hess;  // hess(i, j) = d_i d_jbar F
};

/// A conformal factor compiled for repeated evaluation.
class ConformalFactor {
 public:
  ConformalFactor(Expr F, int n);

  const Expr& expr() const { return F_; }
  int dim() const { return n_; }

  /// Throws DomainError if |Im F(p)| >= 1e-10, EvalError on singular points.
  FactorJet at(std::span<const Complex> p) const;

 private:
  Expr F_;
  int n_;
  Program program_;
};

/// Curvature of exp(2F) g from the transformation law; Rc is coordinate-frame
/// curvature of g at the same point as jet and F.
ChernCurvature conformal_curvature_via_formula(const ChernCurvature& Rc, const MetricJet& jet, const FactorJet& F);

/// Delta F = g^{k lbar} d_k d_lbar F. With this normalisation, on surfaces
/// exp(2F) u~ = u - 4 Delta F and exp(2F) v~ = v - 2 Delta F.
double chern_laplacian(const MetricJet& jet, const FactorJet& F);

struct ScalarRelationResidual {
  double r_u = 0.0;
  double r_v = 0.0;
};

/// |exp(2F) u~ - (u - 4 Delta F)| and |exp(2F) v~ - (v - 2 Delta F)| with u~, v~
/// computed directly from conformal_metric(spec, F). Throws
/// std::invalid_argument unless n = 2.
ScalarRelationResidual surface_scalar_relation_residual(const MetricSpec& spec, const Expr& F,
                                                        std::span<const Complex> p);
/// Same, with both metrics and the factor already compiled.
ScalarRelationResidual surface_scalar_relation_residual(const SymbolicJet& base, const SymbolicJet& conformal,
                                                        const ConformalFactor& F, std::span<const Complex> p);

/// Constancy condition for exp(2F) g written in terms of g:
///   T_{alpha,beta}(g, c = 0) - 2 (n alpha + beta) (g_{i jbar} F_{k lbar} + g_{k lbar} F_{i jbar}
///     + g_{i lbar} F_{k jbar} + g_{k jbar} F_{i lbar}) - 2 f exp(2F) (g_{i jbar} g_{k lbar} + g_{i lbar} g_{k jbar}),
/// max component. Zero exactly when C_{alpha,beta} of exp(2F) g equals f.
/// Rc may be in either frame.
double conformal_constancy_residual(const MetricJet& jet, const ChernCurvature& Rc, const FactorJet& F,
                                    MixedParams params, double f);

}  // namespace chernkit
