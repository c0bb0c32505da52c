#include "chernkit/curvature.hpp"

#include "chernkit/frame.hpp"

namespace chernkit {

namespace {

// g^{a bbar} for a matrix inverse Ginv of g.
inline Complex upper(const Matrix& ginv, int a, int b) { return ginv(b, a); }

Matrix inverse_of(const Matrix& g) {
  Eigen::LLT<Matrix> llt(0.5 * (g + g.adjoint()));
  if (llt.info() != Eigen::Success) throw DomainError("metric is not positive definite");
  return llt.solve(Matrix::Identity(g.rows(), g.cols()));
}

}  // namespace

ChernCurvature chern_curvature(const MetricJet& jet) {
  const int n = jet.dim();
  ChernCurvature out;
  out.R = Tensor4(n);
  out.frame = Frame::Coordinate;
  out.at = jet.point;
  out.basis = Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Complex quad{};
          for (int p = 0; p < n; ++p) {
            const Complex b = jet.dbar_g(j, p, l);
            for (int q = 0; q < n; ++q) quad += jet.inverse(p, q) * jet.dg(i, k, q) * b;
          }
          out.R(i, j, k, l) = -jet.ddbar_g(i, j, k, l) + quad;
        }
      }
    }
  }
  return out;
}

Tensor4 change_frame(const Tensor4& R, const Matrix& E) {
  const int n = R.dim();
  Tensor4 a(n);
  Tensor4 b(n);
  // One index at a time: O(n^5) per pass.
  for (int x = 0; x < n; ++x)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Complex s{};
          for (int i = 0; i < n; ++i) s += E(i, x) * R(i, j, k, l);
          a(x, j, k, l) = s;
        }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Complex s{};
          for (int j = 0; j < n; ++j) s += std::conj(E(j, y)) * a(x, j, k, l);
          b(x, y, k, l) = s;
        }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int l = 0; l < n; ++l) {
          Complex s{};
          for (int k = 0; k < n; ++k) s += E(k, z) * b(x, y, k, l);
          a(x, y, z, l) = s;
        }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          Complex s{};
          for (int l = 0; l < n; ++l) s += std::conj(E(l, w)) * a(x, y, z, l);
          b(x, y, z, w) = s;
        }
  return b;
}

ChernCurvature to_unitary_frame(const ChernCurvature& Rc, const MetricJet& jet) {
  if (Rc.frame != Frame::Coordinate) throw std::invalid_argument("curvature is already in a unitary frame");
  const Matrix E = orthonormal_frame(jet.g);
  ChernCurvature out;
  out.R = change_frame(Rc.R, E);
  out.frame = Frame::Unitary;
  out.at = Rc.at;
  out.basis = E;
  return out;
}

Matrix frame_metric(const ChernCurvature& Rc, const MetricJet& jet) {
  if (Rc.frame == Frame::Unitary) return Matrix::Identity(Rc.dim(), Rc.dim());
  return jet.g;
}

Complex trace(const Matrix& a, const Matrix& g) {
  const Matrix ginv = inverse_of(g);
  Complex s{};
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) s += upper(ginv, i, j) * a(i, j);
  }
  return s;
}

RicciBundle ricci_bundle(const ChernCurvature& Rc, const Matrix& g) {
  const int n = Rc.dim();
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("metric and curvature dimensions differ");
  const Matrix ginv = inverse_of(g);
  const Tensor4& R = Rc.R;
  RicciBundle out;
  out.rho1 = Matrix::Zero(n, n);
  out.rho2 = Matrix::Zero(n, n);
  out.rho3 = Matrix::Zero(n, n);
  out.rho4 = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const Complex r = R(i, j, k, l);
          out.rho1(i, j) += upper(ginv, k, l) * r;
          out.rho2(k, l) += upper(ginv, i, j) * r;
          out.rho3(i, l) += upper(ginv, k, j) * r;
          out.rho4(k, j) += upper(ginv, i, l) * r;
        }
      }
    }
  }
  Complex u{};
  Complex v{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      u += upper(ginv, i, j) * out.rho1(i, j);
      v += upper(ginv, i, j) * out.rho3(i, j);
    }
  }
  const double scale = std::max({1.0, max_abs(out.rho1), max_abs(out.rho3)}) * n;
  if (std::abs(u.imag()) > 1e-10 * scale || std::abs(v.imag()) > 1e-10 * scale) {
    throw std::logic_error("Chern scalar curvatures have non-negligible imaginary part");
  }
  out.u = u.real();
  out.v = v.real();
  return out;
}

Torsion torsion(const MetricJet& jet) {
  const int n = jet.dim();
  Torsion out;
  out.T = Tensor3(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Complex s{};
        for (int l = 0; l < n; ++l) s += jet.inverse(k, l) * (jet.dg(i, j, l) - jet.dg(j, i, l));
        out.T(i, j, k) = s;
        out.T(j, i, k) = -s;
      }
    }
  }
  out.eta = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) out.eta(i) += out.T(i, k, k);
  }
  Complex norm{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) norm += jet.inverse(i, j) * out.eta(i) * std::conj(out.eta(j));
  }
  out.eta_norm2 = std::max(0.0, norm.real());
  return out;
}

double kahler_defect(const MetricJet& jet) {
  const int n = jet.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = 0; l < n; ++l) worst = std::max(worst, std::abs(jet.dg(i, j, l) - jet.dg(j, i, l)));
    }
  }
  return worst;
}

double kahler_like_defect(const ChernCurvature& Rc) {
  const int n = Rc.dim();
  const Tensor4& R = Rc.R;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const Complex r = R(i, j, k, l);
          worst = std::max({worst, std::abs(r - R(k, j, i, l)), std::abs(r - R(i, l, k, j))});
        }
      }
    }
  }
  return worst;
}

double hermitian_asymmetry(const ChernCurvature& Rc) {
  const int n = Rc.dim();
  const Tensor4& R = Rc.R;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) worst = std::max(worst, std::abs(R(i, j, k, l) - std::conj(R(j, i, l, k))));
  return worst / std::max(1.0, R.max_abs());
}

Complex curvature_form(const Tensor4& R, const Vector& X, const Vector& Y, const Vector& Z, const Vector& W) {
  const int n = R.dim();
  Complex s{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex xy = X(i) * std::conj(Y(j));
      for (int k = 0; k < n; ++k) {
        const Complex xyz = xy * Z(k);
        for (int l = 0; l < n; ++l) s += R(i, j, k, l) * xyz * std::conj(W(l));
      }
    }
  }
  return s;
}

Complex hermitian_form(const Matrix& a, const Vector& X, const Vector& Y) {
  return (X.transpose() * a * Y.conjugate())(0, 0);
}

double holomorphic_sectional(const ChernCurvature& Rc, const Matrix& g, const Vector& X) {
  if (X.size() != Rc.dim()) throw std::invalid_argument("vector dimension does not match curvature");
  if (X.squaredNorm() == 0.0) throw std::invalid_argument("holomorphic sectional curvature of the zero vector");
  const double len2 = hermitian_form(g, X, X).real();
  return curvature_form(Rc.R, X, X, X, X).real() / (len2 * len2);
}

}  // namespace chernkit
