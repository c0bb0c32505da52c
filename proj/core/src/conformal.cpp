#include "chernkit/conformal.hpp"

#include <stdexcept>

#include "chernkit/frame.hpp"

namespace chernkit {

MetricSpec conformal_metric(const MetricSpec& spec, const Expr& F) {
  MetricSpec out = spec;
  const Expr scale = exp(2.0 * F);
  for (Expr& e : out.entries) {
    if (!e.is_constant(0.0)) e = scale * e;
  }
  return out;
}

ConformalFactor::ConformalFactor(Expr F, int n) : F_(std::move(F)), n_(n) {
  if (n < 1) throw std::invalid_argument("conformal factor needs dimension >= 1");
  if (max_coordinate(F_) > n) throw std::invalid_argument("conformal factor uses a coordinate beyond the dimension");
  Differentiator D;
  std::vector<Expr> outputs;
  outputs.push_back(F_);
  std::vector<Expr> holo;
  for (int k = 1; k <= n; ++k) holo.push_back(D(F_, Wirtinger::Holomorphic, k));
  for (const Expr& e : holo) outputs.push_back(e);
  for (int k = 1; k <= n; ++k) outputs.push_back(D(F_, Wirtinger::Antiholomorphic, k));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) outputs.push_back(D(holo[static_cast<std::size_t>(i)], Wirtinger::Antiholomorphic, j));
  program_ = Program(outputs);
}

FactorJet ConformalFactor::at(std::span<const Complex> p) const {
  if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("point dimension does not match conformal factor");
  const std::vector<Complex> v = program_.run(p);
  if (std::abs(v[0].imag()) >= 1e-10) throw DomainError("conformal factor is not real at the point");
  FactorJet out;
  out.value = v[0].real();
  out.d.resize(n_);
  out.dbar.resize(n_);
  out.hess.resize(n_, n_);
  std::size_t at = 1;
  for (int k = 0; k < n_; ++k) out.d(k) = v[at++];
  for (int k = 0; k < n_; ++k) out.dbar(k) = v[at++];
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.hess(i, j) = v[at++];
  return out;
}

ChernCurvature conformal_curvature_via_formula(const ChernCurvature& Rc, const MetricJet& jet, const FactorJet& F) {
  if (Rc.frame != Frame::Coordinate) throw std::invalid_argument("conformal law expects coordinate-frame curvature");
  const int n = Rc.dim();
  const double e2f = std::exp(2.0 * F.value);
  ChernCurvature out = Rc;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out.R(i, j, k, l) = e2f * (Rc.R(i, j, k, l) - 2.0 * jet.g(k, l) * F.hess(i, j));
  return out;
}

double chern_laplacian(const MetricJet& jet, const FactorJet& F) {
  const int n = jet.dim();
  Complex s{};
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) s += jet.inverse(k, l) * F.hess(k, l);
  return s.real();
}

namespace {

RicciBundle unitary_scalars(const MetricJet& jet) {
  const ChernCurvature Rc = to_unitary_frame(chern_curvature(jet), jet);
  return ricci_bundle(Rc, Matrix::Identity(jet.dim(), jet.dim()));
}

}  // namespace

ScalarRelationResidual surface_scalar_relation_residual(const SymbolicJet& base, const SymbolicJet& conformal,
                                                        const ConformalFactor& F, std::span<const Complex> p) {
  if (base.dim() != 2 || conformal.dim() != 2 || F.dim() != 2)
    throw std::invalid_argument("scalar relations hold on surfaces only (n = 2)");
  const MetricJet jet = base.at(p);
  const FactorJet fj = F.at(p);
  const RicciBundle before = unitary_scalars(jet);
  const RicciBundle after = unitary_scalars(conformal.at(p));
  const double lap = chern_laplacian(jet, fj);
  const double e2f = std::exp(2.0 * fj.value);
  return {std::abs(e2f * after.u - (before.u - 4.0 * lap)), std::abs(e2f * after.v - (before.v - 2.0 * lap))};
}

ScalarRelationResidual surface_scalar_relation_residual(const MetricSpec& spec, const Expr& F,
                                                        std::span<const Complex> p) {
  if (spec.n != 2) throw std::invalid_argument("scalar relations hold on surfaces only (n = 2)");
  return surface_scalar_relation_residual(SymbolicJet(spec), SymbolicJet(conformal_metric(spec, F)),
                                          ConformalFactor(F, spec.n), p);
}

double conformal_constancy_residual(const MetricJet& jet, const ChernCurvature& Rc, const FactorJet& F,
                                    MixedParams params, double f) {
  const int n = Rc.dim();
  const Matrix g = frame_metric(Rc, jet);
  const Matrix h = Rc.frame == Frame::Unitary ? frame_components(F.hess, Rc.basis) : F.hess;
  const Tensor4 base = constancy_tensor(Rc, g, params, 0.0);
  const double shift = 2.0 * (n * params.alpha + params.beta);
  const double e2f = std::exp(2.0 * F.value);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Complex correction = g(i, j) * h(k, l) + g(k, l) * h(i, j) + g(i, l) * h(k, j) + g(k, j) * h(i, l);
          const Complex rhs = 2.0 * f * e2f * (g(i, j) * g(k, l) + g(i, l) * g(k, j));
          worst = std::max(worst, std::abs(base(i, j, k, l) - shift * correction - rhs));
        }
  return worst;
}

}  // namespace chernkit
