#pragma once

#include <span>
#include <stdexcept>

#include "chernkit/dsl.hpp"
#include "chernkit/program.hpp"
#include "chernkit/tensor.hpp"

namespace chernkit {

/// The metric fails Hermitian symmetry or positive-definiteness at a point,
/// or a point lies outside the declared domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Values of g and its first and mixed second Wirtinger derivatives at a
/// point. All indices are 0-based:
///   g(k, l)              g_{k lbar}
///   dg(i, k, l)          d/dz_i g_{k lbar}
///   dbar_g(j, k, l)      d/dzbar_j g_{k lbar}
///   ddbar_g(i, j, k, l)  d/dz_i d/dzbar_j g_{k lbar}
///   g_inv                matrix inverse of g
struct MetricJet {
  Point point;
  Matrix g;
  Matrix g_inv;
  Tensor3 dg;
  Tensor3 dbar_g;
  Tensor4 ddbar_g;

  int dim() const { return static_cast<int>(g.rows()); }
  /// g^{k lbar}, normalised so that sum_l g^{k lbar} g_{m lbar} = delta_km.
  Complex inverse(int k, int l) const { return g_inv(l, k); }
};

/// Throws DomainError unless g is Hermitian (to 1e-10, relative to max(1, |g|))
/// with strictly positive eigenvalues.
void check_hermitian_positive(const Matrix& g);

/// Symbolic derivative tables of a metric, compiled once and evaluated at
/// many points. Immutable and safe to share across threads.
class SymbolicJet {
 public:
  explicit SymbolicJet(MetricSpec spec);

  const MetricSpec& spec() const { return spec_; }
  int dim() const { return spec_.n; }

  /// Throws EvalError or DomainError.
  MetricJet at(std::span<const Complex> p) const;

  /// Metric matrix only, without the Hermitian/definiteness check.
  Matrix metric(std::span<const Complex> p) const;

 private:
  MetricSpec spec_;
  Program program_;
  Program metric_only_;
};

MetricJet metric_jet(const MetricSpec& spec, std::span<const Complex> p);

/// max over k of |symbolic d/dz_k e - central difference| and the d/dzbar_k
/// counterpart, where d/dz = (d/dx - i d/dy)/2 and d/dzbar = (d/dx + i d/dy)/2.
double fd_residual(const Expr& e, std::span<const Complex> p, double h = 1e-5);

}  // namespace chernkit
