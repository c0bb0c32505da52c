#include "chernkit/frame.hpp"

#include "chernkit/jet.hpp"

namespace chernkit {

Matrix orthonormal_frame(const Matrix& g) {
  if (g.rows() != g.cols() || g.rows() == 0) throw std::invalid_argument("metric must be square");
  check_hermitian_positive(g);
  const Matrix target = (0.5 * (g + g.adjoint())).conjugate();
  Eigen::LLT<Matrix> llt(target);
  if (llt.info() != Eigen::Success) throw DomainError("metric is not positive definite");
  const Matrix L = llt.matrixL();
  const Matrix Linv = L.triangularView<Eigen::Lower>().solve(Matrix::Identity(g.rows(), g.cols()));
  return Linv.adjoint();
}

Matrix frame_components(const Matrix& a, const Matrix& E) { return E.transpose() * a * E.conjugate(); }

Vector frame_coordinates(const Vector& X, const Matrix& E) {
  return E.partialPivLu().solve(X);
}

}  // namespace chernkit
