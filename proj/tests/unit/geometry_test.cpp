#include <gtest/gtest.h>

#include "chernkit/analysis.hpp"
#include "chernkit/catalog.hpp"
#include "chernkit/frame.hpp"
#include "generators.hpp"

namespace chernkit {
namespace {

using testing::random_metric;
using testing::random_point;

Matrix I(int n) { return Matrix::Identity(n, n); }

double r2(const Point& p) {
  double s = 0.0;
  for (const Complex& z : p) s += std::norm(z);
  return s;
}

// Wirtinger second derivative d_i d_jbar of a scalar function by central
// differences in the real coordinates.
Complex fd_ddbar(const Expr& e, const Point& p, int i, int j, double h) {
  auto f = [&](int a, double da, int b, double db) {
    Point q = p;
    q[static_cast<std::size_t>(a / 2)] += (a % 2 == 0) ? Complex(da, 0) : Complex(0, da);
    q[static_cast<std::size_t>(b / 2)] += (b % 2 == 0) ? Complex(db, 0) : Complex(0, db);
    return evaluate(e, q);
  };
  auto second = [&](int a, int b) {
    return (f(a, h, b, h) - f(a, h, b, -h) - f(a, -h, b, h) + f(a, -h, b, -h)) / (4.0 * h * h);
  };
  const int xi = 2 * i;
  const int yi = 2 * i + 1;
  const int xj = 2 * j;
  const int yj = 2 * j + 1;
  const Complex I1(0.0, 1.0);
  return 0.25 * (second(xi, xj) + second(yi, yj) + I1 * second(xi, yj) - I1 * second(yi, xj));
}

TEST(Jet, SecondDerivativesMatchFiniteDifferences) {
  Rng rng(201);
  for (int trial = 0; trial < 5; ++trial) {
    const MetricSpec spec = random_metric(rng, 2);
    const SymbolicJet jet(spec);
    const Point p = random_point(rng, 2, 0.4);
    const MetricJet mj = jet.at(p);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            EXPECT_NEAR(std::abs(mj.ddbar_g(i, j, k, l) - fd_ddbar(spec.entry(k, l), p, i, j, 1e-4)), 0.0, 1e-6);
  }
}

TEST(Jet, FirstDerivativesMatchFiniteDifferences) {
  Rng rng(202);
  const MetricSpec spec = random_metric(rng, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const Point p = random_point(rng, 3, 0.4);
    for (const Expr& e : spec.entries) EXPECT_LT(fd_residual(e, p), 1e-8);
  }
}

TEST(Jet, InverseAndChecks) {
  const MetricSpec spec = builtin("fubini-study-3").spec;
  const MetricJet mj = metric_jet(spec, Point{{0.2, 0.1}, {-0.3, 0.2}, {0.1, -0.4}});
  EXPECT_LT(max_abs(mj.g * mj.g_inv - I(3)), 1e-14);
  Matrix bad = I(2);
  bad(0, 1) = 0.5;
  EXPECT_THROW(check_hermitian_positive(bad), DomainError);
  Matrix indefinite = I(2);
  indefinite(1, 1) = -1.0;
  EXPECT_THROW(check_hermitian_positive(indefinite), DomainError);
  EXPECT_THROW(metric_jet(builtin("hopf-2").spec, Point{{0, 0}, {0, 0}}), EvalError);
  EXPECT_THROW(metric_jet(spec, Point{{0, 0}}), std::invalid_argument);
}

TEST(Frame, HandValues) {
  Matrix g = Matrix::Zero(2, 2);
  g(0, 0) = 4.0;
  g(1, 1) = 1.0;
  const Matrix E = orthonormal_frame(g);
  EXPECT_NEAR(std::abs(E(0, 0) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(E(1, 1) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(E(0, 1), Complex(0.0));
  // Hopf metric at (2, 0) is I/4
  EXPECT_LT(max_abs(orthonormal_frame(I(2) / 4.0) - 2.0 * I(2)), 1e-15);
}

TEST(FrameProperty, UnitaryAndTriangular) {
  Rng rng(203);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    Matrix A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = rng.complex_normal();
    const Matrix g = A * A.adjoint() + 0.5 * I(n);
    const Matrix E = orthonormal_frame(g);
    EXPECT_LT(max_abs(frame_components(g, E) - I(n)), 1e-12);
    for (int i = 0; i < n; ++i) {
      EXPECT_GT(E(i, i).real(), 0.0);
      EXPECT_EQ(E(i, i).imag(), 0.0);
      for (int j = 0; j < i; ++j) EXPECT_EQ(E(i, j), Complex(0.0));
    }
    Vector X(n);
    for (int i = 0; i < n; ++i) X(i) = rng.complex_normal();
    EXPECT_LT((E * frame_coordinates(X, E) - X).norm(), 1e-12);
  }
}

TEST(Curvature, HopfCoordinateClosedForm) {
  const SymbolicJet jet(builtin("hopf-3").spec);
  Rng rng(204);
  for (int trial = 0; trial < 10; ++trial) {
    const Point p = random_point(rng, 3, 1.5);
    const double r = r2(p);
    const ChernCurvature Rc = chern_curvature(jet.at(p));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            const Complex zz = std::conj(p[static_cast<std::size_t>(i)]) * p[static_cast<std::size_t>(j)];
            const Complex expected = k == l ? (i == j ? 1.0 : 0.0) / (r * r) - zz / (r * r * r) : Complex{};
            EXPECT_LT(std::abs(Rc.R(i, j, k, l) - expected) * r * r, 1e-12);
          }
  }
}

TEST(Curvature, HopfTorsionAndRicci) {
  for (int n : {2, 3, 4}) {
    const SymbolicJet jet(builtin("hopf-" + std::to_string(n)).spec);
    Point p(static_cast<std::size_t>(n));
    p[0] = {0.6, -0.2};
    p[1] = {0.1, 0.7};
    const double r = r2(p);
    const PointAnalysis a = analyze(jet, p);
    EXPECT_NEAR(a.ricci.u, n * n - n, 1e-12);
    EXPECT_NEAR(a.ricci.v, n - 1.0, 1e-12);
    EXPECT_NEAR(a.torsion.eta_norm2, (n - 1.0) * (n - 1.0), 1e-12);
    for (int i = 0; i < n; ++i) {
      const Complex eta = (1.0 - n) * std::conj(p[static_cast<std::size_t>(i)]) / r;
      EXPECT_LT(std::abs(a.torsion.eta(i) - eta), 1e-12);
      for (int k = 0; k < n; ++k) EXPECT_EQ(a.torsion.T(i, i, k), Complex(0.0));
    }
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        const Complex zz = std::conj(p[static_cast<std::size_t>(i)]) * p[static_cast<std::size_t>(l)] / r;
        const double d = i == l ? 1.0 : 0.0;
        EXPECT_LT(std::abs(a.ricci.rho1(i, l) - static_cast<double>(n) * (d - zz)), 1e-12);
        EXPECT_LT(std::abs(a.ricci.rho2(i, l) - (n - 1.0) * d), 1e-12);
        EXPECT_LT(std::abs(a.ricci.rho3(i, l) - (d - zz)), 1e-12);
        EXPECT_LT(std::abs(a.ricci.rho4(i, l) - (d - zz)), 1e-12);
      }
  }
  const MetricJet at = metric_jet(builtin("hopf-2").spec, Point{{1.0, 0.0}, {0.0, 0.0}});
  EXPECT_NEAR(kahler_defect(at), 1.0, 1e-14);
}

TEST(Curvature, FubiniStudyFromPotential) {
  // Oracle: differentiate the Kahler potential log(1 + |z|^2) here, then
  // compare against the space-form tensor g_ij g_kl + g_il g_kj.
  const int n = 3;
  const Expr K = log(Expr(1.0) + abs2(n));
  MetricSpec spec(n, "potential", Domain::ball(0.8));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      spec.entry(i - 1, j - 1) = diff(diff(K, Wirtinger::Holomorphic, i), Wirtinger::Antiholomorphic, j);
  const SymbolicJet from_potential(spec);
  const SymbolicJet catalog(builtin("fubini-study-3").spec);
  Rng rng(205);
  for (int trial = 0; trial < 10; ++trial) {
    const Point p = random_point(rng, n, 0.8);
    const MetricJet a = from_potential.at(p);
    const MetricJet b = catalog.at(p);
    EXPECT_LT(max_abs(a.g - b.g), 1e-14);
    const ChernCurvature Rc = chern_curvature(a);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            EXPECT_LT(std::abs(Rc.R(i, j, k, l) - (a.g(i, j) * a.g(k, l) + a.g(i, l) * a.g(k, j))), 1e-12);
    EXPECT_LT(max_abs_difference(Rc.R, chern_curvature(b).R), 1e-12);
  }
}

TEST(Curvature, AdmProductUnitaryValues) {
  const SymbolicJet jet(builtin("adm-product-surface").spec);
  const PointAnalysis a = analyze(jet, Point{{0.3, -0.2}, {1.2, 0.5}});
  EXPECT_NEAR(a.unitary.R(0, 0, 0, 0).real(), -1.0, 1e-12);
  EXPECT_NEAR(a.unitary.R(1, 1, 1, 1).real(), 1.0, 1e-12);
  EXPECT_LT(std::abs(a.unitary.R(0, 0, 1, 1)), 1e-12);
  EXPECT_LT(max_abs(a.ricci.rho1 - Matrix((Matrix(2, 2) << -1.0, 0.0, 0.0, 1.0).finished())), 1e-12);
  EXPECT_NEAR(a.ricci.u, 0.0, 1e-12);
}

TEST(CurvatureProperty, HermitianSymmetryOnRandomMetrics) {
  Rng rng(206);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 2;
    const SymbolicJet jet(random_metric(rng, n));
    const MetricJet mj = jet.at(random_point(rng, n, 0.4));
    EXPECT_LT(hermitian_asymmetry(chern_curvature(mj)), 1e-13);
  }
}

TEST(CurvatureProperty, InvariantsAgreeAcrossFrames) {
  Rng rng(207);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    const SymbolicJet jet(random_metric(rng, n));
    const MetricJet mj = jet.at(random_point(rng, n, 0.4));
    const ChernCurvature Rc = chern_curvature(mj);
    const ChernCurvature U = to_unitary_frame(Rc, mj);
    const RicciBundle bc = ricci_bundle(Rc, mj.g);
    const RicciBundle bu = ricci_bundle(U, frame_metric(U, mj));
    EXPECT_NEAR(bc.u, bu.u, 1e-11);
    EXPECT_NEAR(bc.v, bu.v, 1e-11);
    EXPECT_LT(max_abs(frame_components(bc.rho1, U.basis) - bu.rho1), 1e-11);
    Vector X(n);
    for (int i = 0; i < n; ++i) X(i) = rng.complex_normal();
    EXPECT_NEAR(holomorphic_sectional(Rc, mj.g, X), holomorphic_sectional(U, I(n), frame_coordinates(X, U.basis)),
                1e-11);
    EXPECT_NEAR(holomorphic_sectional(Rc, mj.g, X), holomorphic_sectional(Rc, mj.g, Complex(0.0, 2.5) * X), 1e-11);
    // first Ricci traces of R and of rho agree
    EXPECT_NEAR(trace(bc.rho1, mj.g).real(), bc.u, 1e-11);
    EXPECT_LT(max_abs(bc.rho1 - bc.rho1.adjoint()), 1e-12);
  }
}

TEST(CurvatureProperty, TorsionVanishesExactlyForKahlerAndIsAntisymmetric) {
  Rng rng(208);
  const SymbolicJet fs(builtin("fubini-study-3").spec);
  for (int trial = 0; trial < 10; ++trial) {
    const MetricJet mj = fs.at(random_point(rng, 3, 0.7));
    EXPECT_LT(torsion(mj).T.max_abs(), 1e-14);
    EXPECT_LT(kahler_defect(mj), 1e-14);
    const SymbolicJet random(random_metric(rng, 3));
    const Torsion t = torsion(random.at(random_point(rng, 3, 0.4)));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) EXPECT_EQ(t.T(i, j, k), -t.T(j, i, k));
  }
}

TEST(Curvature, Errors) {
  const SymbolicJet jet(builtin("euclidean-2").spec);
  const MetricJet mj = jet.at(Point{{0.1, 0.0}, {0.0, 0.1}});
  const ChernCurvature U = to_unitary_frame(chern_curvature(mj), mj);
  EXPECT_THROW(to_unitary_frame(U, mj), std::invalid_argument);
  EXPECT_THROW(holomorphic_sectional(U, I(2), Vector::Zero(2)), std::invalid_argument);
  EXPECT_THROW(ricci_bundle(U, I(3)), std::invalid_argument);
}

TEST(Analysis, Quantities) {
  const PointAnalysis a = analyze(SymbolicJet(builtin("fubini-study-2").spec), Point{{0.1, 0.2}, {0.3, -0.1}});
  EXPECT_NEAR(quantity(a, "H_e1"), 2.0, 1e-12);
  EXPECT_NEAR(quantity(a, "u"), 6.0, 1e-12);
  EXPECT_THROW(quantity(a, "w"), std::invalid_argument);
  const PointAnalysis b = analyze(SymbolicJet(builtin("euclidean-1").spec), Point{{0.1, 0.2}});
  EXPECT_THROW(quantity(b, "R_2222"), std::invalid_argument);
}

}  // namespace
}  // namespace chernkit
