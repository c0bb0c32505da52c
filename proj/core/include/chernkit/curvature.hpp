#pragma once

// Chern curvature, torsion and Ricci traces of a Hermitian metric at a point.
//
// Index convention: R(i, j, k, l) is R_{i jbar k lbar}, with (i, jbar) the
// differentiation pair:
//
//   R_{i jbar k lbar} = -d_i d_jbar g_{k lbar}
//                       + g^{p qbar} (d_i g_{k qbar}) (d_jbar g_{p lbar})

#include "chernkit/jet.hpp"
#include "chernkit/tensor.hpp"

namespace chernkit {

enum class Frame { Coordinate, Unitary };

struct ChernCurvature {
  Tensor4 R;
  Frame frame = Frame::Coordinate;
  Point at;
  /// Frame vectors as columns in coordinates; identity for the coordinate frame.
  Matrix basis;

  int dim() const { return R.dim(); }
};

struct RicciBundle {
  Matrix rho1;  // g^{k lbar} R_{i jbar k lbar}
  Matrix rho2;  // g^{i jbar} R_{i jbar k lbar}
  Matrix rho3;  // g^{k jbar} R_{i jbar k lbar}, indexed (i, l)
  Matrix rho4;  // g^{i lbar} R_{i jbar k lbar}, indexed (k, j)
  double u = 0.0;  // Chern scalar curvature, trace of rho1
  double v = 0.0;  // altered Chern scalar curvature, trace of rho3
};

struct Torsion {
  Tensor3 T;            // T(i, j, k) = T^k_{ij}
  Vector eta;           // eta_i = sum_k T^k_{ik}
  double eta_norm2 = 0; // g^{i jbar} eta_i conj(eta_j)
};

ChernCurvature chern_curvature(const MetricJet& jet);

/// R_{a bbar c dbar} = sum E(i,a) conj(E(j,b)) E(k,c) conj(E(l,d)) R_{i jbar k lbar}.
Tensor4 change_frame(const Tensor4& R, const Matrix& E);

/// Re-expresses coordinate-frame curvature in orthonormal_frame(jet.g).
ChernCurvature to_unitary_frame(const ChernCurvature& Rc, const MetricJet& jet);

/// The metric in the frame of Rc: jet.g for coordinates, identity for unitary.
Matrix frame_metric(const ChernCurvature& Rc, const MetricJet& jet);

/// g^{i jbar} a_{i jbar}.
Complex trace(const Matrix& a, const Matrix& g);

/// Four Ricci contractions and the two scalars; g must be the metric in the
/// frame of Rc. Throws std::logic_error if u or v has a non-negligible
/// imaginary part.
RicciBundle ricci_bundle(const ChernCurvature& Rc, const Matrix& g);

Torsion torsion(const MetricJet& jet);

/// max |d_i g_{j lbar} - d_j g_{i lbar}|; zero exactly when d omega = 0 at the point.
double kahler_defect(const MetricJet& jet);

/// max of |R_{i jbar k lbar} - R_{k jbar i lbar}| and |R_{i jbar k lbar} - R_{i lbar k jbar}|.
double kahler_like_defect(const ChernCurvature& Rc);

/// max |R_{i jbar k lbar} - conj(R_{j ibar l kbar})| relative to max(1, max |R|).
double hermitian_asymmetry(const ChernCurvature& Rc);

/// R(X, Ybar, Z, Wbar) = sum R_{i jbar k lbar} X^i conj(Y^j) Z^k conj(W^l).
Complex curvature_form(const Tensor4& R, const Vector& X, const Vector& Y, const Vector& Z, const Vector& W);

/// Hermitian form a(X, Ybar) = sum a_{i jbar} X^i conj(Y^j).
Complex hermitian_form(const Matrix& a, const Vector& X, const Vector& Y);

/// H(X) = R(X, Xbar, X, Xbar) / |X|^4. Throws std::invalid_argument for X = 0.
double holomorphic_sectional(const ChernCurvature& Rc, const Matrix& g, const Vector& X);

}  // namespace chernkit
