#include <gtest/gtest.h>

#include <cmath>

#include "chernkit/analysis.hpp"
#include "chernkit/catalog.hpp"
#include "chernkit/conformal.hpp"
#include "chernkit/mixed.hpp"
#include "generators.hpp"

namespace chernkit {
namespace {

using testing::random_metric;
using testing::random_point;
using testing::random_real_factor;

Matrix I(int n) { return Matrix::Identity(n, n); }

TEST(Conformal, ZeroFactorIsIdentity) {
  const MetricSpec spec = builtin("hopf-3").spec;
  const MetricSpec same = conformal_metric(spec, Expr(0.0));
  EXPECT_EQ(same.name, spec.name);
  EXPECT_EQ(same.domain.to_string(), spec.domain.to_string());
  const Point p{{0.5, 0.3}, {0.1, -0.6}, {0.2, 0.2}};
  EXPECT_LT(max_abs(SymbolicJet(same).metric(p) - SymbolicJet(spec).metric(p)), 1e-15);
  const ConformalFactor zero(Expr(0.0), 3);
  const FactorJet fj = zero.at(p);
  EXPECT_EQ(fj.value, 0.0);
  EXPECT_EQ(max_abs(fj.hess), 0.0);
  const MetricJet jet = metric_jet(spec, p);
  const ChernCurvature Rc = chern_curvature(jet);
  EXPECT_LT(max_abs_difference(conformal_curvature_via_formula(Rc, jet, fj).R, Rc.R), 1e-15);
}

TEST(Conformal, ConstantFactorRescales) {
  const double c = 0.4;
  for (const char* name : {"fubini-study-2", "hopf-2", "adm-product-surface"}) {
    const CatalogEntry entry = builtin(name);
    const Point p = sample_points(entry, 1, 5).front();
    const PointAnalysis base = analyze(SymbolicJet(entry.spec), p);
    const PointAnalysis scaled = analyze(SymbolicJet(conformal_metric(entry.spec, Expr(c))), p);
    EXPECT_NEAR(scaled.ricci.u, std::exp(-2 * c) * base.ricci.u, 1e-12) << name;
    EXPECT_NEAR(scaled.ricci.v, std::exp(-2 * c) * base.ricci.v, 1e-12) << name;
    EXPECT_NEAR(scaled.kahler_defect, std::exp(2 * c) * base.kahler_defect, 1e-12) << name;
    EXPECT_NEAR(scaled.torsion.eta_norm2, std::exp(-2 * c) * base.torsion.eta_norm2, 1e-12) << name;
  }
}

TEST(Conformal, FlatToHopf) {
  const Expr F = parse_expression("-0.5*log(abs2(z))", 2);
  const SymbolicJet image(conformal_metric(builtin("euclidean-2").spec, F));
  const SymbolicJet hopf(builtin("hopf-2").spec);
  const ConformalFactor factor(F, 2);
  const SymbolicJet flat(builtin("euclidean-2").spec);
  for (const Point& p : sample_points(builtin("hopf-2"), 10, 3)) {
    EXPECT_LT(max_abs(image.metric(p) - hopf.metric(p)), 1e-14);
    const MetricJet jet = flat.at(p);
    const ChernCurvature predicted = conformal_curvature_via_formula(chern_curvature(jet), jet, factor.at(p));
    EXPECT_LT(max_abs_difference(predicted.R, chern_curvature(hopf.at(p)).R), 1e-12);
    // Hopf is constant for (1, -n) with value 0
    EXPECT_LT(conformal_constancy_residual(jet, chern_curvature(jet), factor.at(p), MixedParams(1.0, -2.0), 0.0),
              1e-12);
    EXPECT_GT(conformal_constancy_residual(jet, chern_curvature(jet), factor.at(p), MixedParams(1.0, 0.0), 0.0),
              1e-3);
  }
}

TEST(Conformal, LaplacianExamples) {
  const Point p{{1.0, 0.0}, {0.0, 0.0}};
  const MetricJet flat = metric_jet(builtin("euclidean-2").spec, p);
  const MetricJet hopf = metric_jet(builtin("hopf-2").spec, p);
  const ConformalFactor mixed(parse_expression("z1*zbar2 + z2*zbar1", 2), 2);
  const ConformalFactor radial(parse_expression("z1*zbar1", 2), 2);
  EXPECT_NEAR(chern_laplacian(flat, mixed.at(p)), 0.0, 1e-15);
  EXPECT_NEAR(chern_laplacian(flat, radial.at(p)), 1.0, 1e-15);
  EXPECT_NEAR(chern_laplacian(hopf, radial.at(p)), 1.0, 1e-15);
  const Point q{{2.0, 0.0}, {0.0, 0.0}};
  EXPECT_NEAR(chern_laplacian(metric_jet(builtin("hopf-2").spec, q), radial.at(q)), 4.0, 1e-14);
}

TEST(Conformal, FactorJetValues) {
  const ConformalFactor F(parse_expression("0.5*z1*zbar1 + z2*zbar2*z1*zbar1", 2), 2);
  const Point p{{0.3, 0.4}, {1.0, 0.0}};
  const FactorJet j = F.at(p);
  EXPECT_NEAR(j.value, 0.5 * 0.25 + 0.25, 1e-15);
  // d_1 F = 0.5 zbar1 + |z2|^2 zbar1 = 1.5 zbar1
  EXPECT_LT(std::abs(j.d(0) - 1.5 * std::conj(p[0])), 1e-15);
  EXPECT_LT(std::abs(j.dbar(0) - 1.5 * p[0]), 1e-15);
  EXPECT_LT(std::abs(j.hess(0, 0) - 1.5), 1e-15);
  // d_1 d_2bar F = zbar1 z2
  EXPECT_LT(std::abs(j.hess(0, 1) - std::conj(p[0]) * p[1]), 1e-15);
  EXPECT_LT(max_abs(j.hess - j.hess.adjoint()), 1e-15);
}

TEST(Conformal, Errors) {
  const ConformalFactor complex_valued(Expr::coord(1), 2);
  EXPECT_THROW(complex_valued.at(Point{{0.1, 0.2}, {0.0, 0.0}}), DomainError);
  EXPECT_NO_THROW(complex_valued.at(Point{{0.1, 0.0}, {0.0, 0.0}}));
  const ConformalFactor singular(parse_expression("log(abs2(z))", 2), 2);
  EXPECT_THROW(singular.at(Point{{0.0, 0.0}, {0.0, 0.0}}), EvalError);
  const MetricSpec fs3 = builtin("fubini-study-3").spec;
  EXPECT_THROW(surface_scalar_relation_residual(fs3, Expr(0.0), Point(3, Complex(0.1))), std::invalid_argument);
}

TEST(ConformalProperty, TransformationLawMatchesDirectComputation) {
  Rng rng(401);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    const MetricSpec spec = random_metric(rng, n);
    const Expr F = random_real_factor(rng, n);
    const SymbolicJet base(spec);
    const SymbolicJet tilde(conformal_metric(spec, F));
    const ConformalFactor factor(F, n);
    const Point p = random_point(rng, n, 0.4);
    const MetricJet jet = base.at(p);
    const FactorJet fj = factor.at(p);
    const ChernCurvature Rc = chern_curvature(jet);
    const MetricJet tj = tilde.at(p);
    const ChernCurvature direct = chern_curvature(tj);
    EXPECT_LT(max_abs_difference(conformal_curvature_via_formula(Rc, jet, fj).R, direct.R), 1e-11);
    // first Ricci shifts by -2n times the Hessian
    const Matrix rho = ricci_bundle(Rc, jet.g).rho1;
    const Matrix rho_tilde = ricci_bundle(direct, tj.g).rho1;
    EXPECT_LT(max_abs(rho_tilde - (rho - 2.0 * n * fj.hess)), 1e-11);
  }
}

TEST(ConformalProperty, SurfaceScalarRelations) {
  Rng rng(402);
  for (int trial = 0; trial < 20; ++trial) {
    const MetricSpec spec = random_metric(rng, 2);
    const Expr F = random_real_factor(rng, 2);
    const Point p = random_point(rng, 2, 0.4);
    const ScalarRelationResidual r = surface_scalar_relation_residual(spec, F, p);
    EXPECT_LT(r.r_u, 1e-11);
    EXPECT_LT(r.r_v, 1e-11);
    // the same relation by hand
    const PointAnalysis a = analyze(SymbolicJet(spec), p);
    const PointAnalysis t = analyze(SymbolicJet(conformal_metric(spec, F)), p);
    const FactorJet fj = ConformalFactor(F, 2).at(p);
    const double lap = chern_laplacian(a.jet, fj);
    EXPECT_NEAR(std::exp(2 * fj.value) * t.ricci.u, a.ricci.u - 4 * lap, 1e-11);
    EXPECT_NEAR(std::exp(2 * fj.value) * t.ricci.v, a.ricci.v - 2 * lap, 1e-11);
  }
}

TEST(ConformalProperty, ConstancyResidualDegeneratesAtZeroFactor) {
  Rng rng(403);
  const ConformalFactor zero(Expr(0.0), 3);
  for (int trial = 0; trial < 10; ++trial) {
    const SymbolicJet jet(random_metric(rng, 3));
    const Point p = random_point(rng, 3, 0.4);
    const MetricJet mj = jet.at(p);
    const ChernCurvature Rc = chern_curvature(mj);
    const MixedParams params(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double f = rng.uniform(-1, 1);
    EXPECT_NEAR(conformal_constancy_residual(mj, Rc, zero.at(p), params, f),
                constancy_tensor_residual(Rc, mj.g, params, f), 1e-13);
    const ChernCurvature U = to_unitary_frame(Rc, mj);
    EXPECT_NEAR(conformal_constancy_residual(mj, U, zero.at(p), params, f),
                constancy_tensor_residual(U, I(3), params, f), 1e-13);
  }
}

TEST(ConformalProperty, ConstancyResidualMatchesConformalMetric) {
  // The residual written in terms of g vanishes exactly when the constancy
  // tensor of exp(2F) g does; compare zero sets through a scaling identity.
  Rng rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const MetricSpec spec = random_metric(rng, 2);
    const Expr F = random_real_factor(rng, 2);
    const Point p = random_point(rng, 2, 0.4);
    const MetricJet mj = metric_jet(spec, p);
    const FactorJet fj = ConformalFactor(F, 2).at(p);
    const MetricJet tj = metric_jet(conformal_metric(spec, F), p);
    const MixedParams params(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double f = rng.uniform(-1, 1);
    // Coordinate components of the tilde constancy tensor are exp(2F) times
    // the residual tensor, so the maxima differ by the same factor.
    const double via = conformal_constancy_residual(mj, chern_curvature(mj), fj, params, f);
    const double direct = constancy_tensor_residual(chern_curvature(tj), tj.g, params, f);
    EXPECT_NEAR(direct, std::exp(2 * fj.value) * via, 1e-11 * std::max(1.0, direct));
  }
}

TEST(Conformal, AdmProductConstancy) {
  const CatalogEntry entry = builtin("adm-product-surface");
  const SymbolicJet jet(entry.spec);
  const ConformalFactor zero(Expr(0.0), 2);
  for (const Point& p : sample_points(entry, 10, 9)) {
    const PointAnalysis a = analyze(jet, p);
    EXPECT_LT(conformal_constancy_residual(a.jet, a.unitary, zero.at(p), MixedParams(1.0, -1.0), 0.0), 1e-10);
    EXPECT_LT(constancy_tensor_residual(a.unitary, I(2), MixedParams(1.0, -1.0), 0.0), 1e-10);
    EXPECT_GT(extremize(a.unitary, I(2), MixedParams(1.0, 1.0)).spread, 1.0);
  }
}

}  // namespace
}  // namespace chernkit
