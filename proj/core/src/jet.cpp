#include "chernkit/jet.hpp"

#include <Eigen/Eigenvalues>

namespace chernkit {

void check_hermitian_positive(const Matrix& g) {
  const double scale = std::max(1.0, max_abs(g));
  const double asym = max_abs(g - g.adjoint());
  if (!(asym < 1e-10 * scale)) {
    throw DomainError("metric is not Hermitian (asymmetry " + std::to_string(asym) + ")");
  }
  const Matrix sym = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success || !(eig.eigenvalues().minCoeff() > 0.0)) {
    throw DomainError("metric is not positive definite");
  }
}

SymbolicJet::SymbolicJet(MetricSpec spec) : spec_(std::move(spec)) {
  const int n = spec_.n;
  if (n < 1 || spec_.entries.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("malformed metric spec");
  }
  for (const Expr& e : spec_.entries) {
    if (max_coordinate(e) > n) throw std::invalid_argument("metric entry references a coordinate beyond dim");
  }
  Differentiator d;
  std::vector<Expr> outputs;
  outputs.reserve(static_cast<std::size_t>(n) * n * (1 + 2 * n + n * n));
  for (const Expr& e : spec_.entries) outputs.push_back(e);
  // dg and dbar_g, layout [i][k][l]
  for (Wirtinger w : {Wirtinger::Holomorphic, Wirtinger::Antiholomorphic}) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) outputs.push_back(d(spec_.entry(k, l), w, i + 1));
      }
    }
  }
  // ddbar_g, layout [i][j][k][l]: d/dzbar_j of d/dz_i
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const Expr first = d(spec_.entry(k, l), Wirtinger::Holomorphic, i + 1);
          outputs.push_back(d(first, Wirtinger::Antiholomorphic, j + 1));
        }
      }
    }
  }
  program_ = Program(outputs);
  metric_only_ = Program(std::span<const Expr>(spec_.entries));
}

Matrix SymbolicJet::metric(std::span<const Complex> p) const {
  const int n = spec_.n;
  const std::vector<Complex> v = metric_only_.run(p);
  Matrix g(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) g(k, l) = v[static_cast<std::size_t>(k * n + l)];
  }
  return g;
}

MetricJet SymbolicJet::at(std::span<const Complex> p) const {
  const int n = spec_.n;
  if (p.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("point dimension does not match metric");
  const std::vector<Complex> v = program_.run(p);
  MetricJet jet;
  jet.point.assign(p.begin(), p.end());
  jet.g.resize(n, n);
  jet.dg = Tensor3(n);
  jet.dbar_g = Tensor3(n);
  jet.ddbar_g = Tensor4(n);
  std::size_t at = 0;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) jet.g(k, l) = v[at++];
  }
  for (Tensor3* t : {&jet.dg, &jet.dbar_g}) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) (*t)(i, k, l) = v[at++];
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) jet.ddbar_g(i, j, k, l) = v[at++];
      }
    }
  }
  check_hermitian_positive(jet.g);
  // Solve against the Hermitian part; the asymmetry is below 1e-10 already.
  const Matrix sym = 0.5 * (jet.g + jet.g.adjoint());
  Eigen::LLT<Matrix> llt(sym);
  if (llt.info() != Eigen::Success) throw DomainError("metric is not positive definite");
  jet.g_inv = llt.solve(Matrix::Identity(n, n));
  return jet;
}

MetricJet metric_jet(const MetricSpec& spec, std::span<const Complex> p) { return SymbolicJet(spec).at(p); }

double fd_residual(const Expr& e, std::span<const Complex> p, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const Complex I{0.0, 1.0};
  double worst = 0.0;
  Point q(p.begin(), p.end());
  auto shifted = [&](std::size_t k, Complex delta) {
    q[k] = p[k] + delta;
    const Complex v = evaluate(e, q);
    q[k] = p[k];
    return v;
  };
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Complex dx = (shifted(k, h) - shifted(k, -h)) / (2.0 * h);
    const Complex dy = (shifted(k, I * h) - shifted(k, -I * h)) / (2.0 * h);
    const Complex fd_holo = 0.5 * (dx - I * dy);
    const Complex fd_anti = 0.5 * (dx + I * dy);
    const int idx = static_cast<int>(k) + 1;
    const Complex sym_holo = evaluate(diff(e, Wirtinger::Holomorphic, idx), p);
    const Complex sym_anti = evaluate(diff(e, Wirtinger::Antiholomorphic, idx), p);
    worst = std::max({worst, std::abs(sym_holo - fd_holo), std::abs(sym_anti - fd_anti)});
  }
  return worst;
}

}  // namespace chernkit
