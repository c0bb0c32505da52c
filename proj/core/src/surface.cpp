#include "chernkit/surface.hpp"

#include <cmath>
#include <stdexcept>

namespace chernkit {

namespace {

void require_surface(int n) {
  if (n != 2) throw std::invalid_argument("surface identity needs complex dimension 2");
}

}  // namespace

WeylMinus weyl_minus(const ChernCurvature& Rc) {
  require_surface(Rc.dim());
  if (Rc.frame != Frame::Unitary) throw std::invalid_argument("W- components need a unitary frame");
  const Tensor4& R = Rc.R;
  WeylMinus w;
  w.w1 = R(0, 1, 0, 1);
  w.w2 = (R(0, 1, 1, 1) + R(1, 1, 0, 1) - R(0, 1, 0, 0) - R(0, 0, 0, 1)) / std::sqrt(2.0);
  w.w3 = (R(0, 0, 0, 0) + R(1, 1, 1, 1) - R(0, 0, 1, 1) - R(1, 1, 0, 0) - R(0, 1, 1, 0) - R(1, 0, 0, 1)) / 6.0;
  w.frame = Rc.basis;
  return w;
}

OneOneForm::OneOneForm(Matrix components, bool is_real) : a(std::move(components)), real(is_real) {
  if (a.rows() != a.cols()) throw std::invalid_argument("(1,1)-form must be square");
  if (real && max_abs(a - a.adjoint()) > 1e-10 * std::max(1.0, max_abs(a)))
    throw std::invalid_argument("real (1,1)-form must be Hermitian");
}

Complex form_inner(const Matrix& a, const Matrix& b, const Matrix& g) {
  const Matrix ginv = g.inverse();
  // g^{i kbar} = ginv(k, i)
  Complex s{};
  const int n = static_cast<int>(g.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += ginv(k, i) * ginv(j, l) * a(i, j) * std::conj(b(k, l));
  return s;
}

Complex wedge_ratio(const Matrix& a, const Matrix& b, const Matrix& g) {
  require_surface(static_cast<int>(g.rows()));
  const Complex num = a(0, 0) * b(1, 1) + a(1, 1) * b(0, 0) - a(0, 1) * b(1, 0) - a(1, 0) * b(0, 1);
  return num / (2.0 * g.determinant());
}

double ricci_combination_residual(const RicciBundle& bundle, const Matrix& g) {
  require_surface(static_cast<int>(g.rows()));
  const Matrix lhs = bundle.rho1 + bundle.rho2 - (bundle.rho3 + bundle.rho4);
  return max_abs(lhs - (bundle.u - bundle.v) * g);
}

double c1_squared_pointwise_residual(const RicciBundle& bundle, const Matrix& g) {
  require_surface(static_cast<int>(g.rows()));
  const Complex lhs = wedge_ratio(bundle.rho1, bundle.rho1, g);
  const double rhs = 0.5 * (bundle.u * bundle.u - form_inner(bundle.rho1, bundle.rho1, g).real());
  return std::abs(lhs - rhs);
}

double c1_squared_pointwise_residual(const OneOneForm& rho, const Matrix& g) {
  require_surface(static_cast<int>(g.rows()));
  RicciBundle b;
  b.rho1 = rho.a;
  b.u = trace(rho.a, g).real();
  return c1_squared_pointwise_residual(b, g);
}

}  // namespace chernkit
