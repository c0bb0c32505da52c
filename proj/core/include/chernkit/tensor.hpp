#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace chernkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense n x n x n complex array, row-major.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n) {}

  int dim() const { return n_; }
  Complex& operator()(int i, int j, int k) { return data_[offset(i, j, k)]; }
  Complex operator()(int i, int j, int k) const { return data_[offset(i, j, k)]; }
  const std::vector<Complex>& data() const { return data_; }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& c : data_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  std::size_t offset(int i, int j, int k) const {
    assert(i >= 0 && j >= 0 && k >= 0 && i < n_ && j < n_ && k < n_);
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }
  int n_ = 0;
  std::vector<Complex> data_;
};

/// Dense n^4 complex array, row-major. Used for R_{i jbar k lbar} and
/// second metric derivatives.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n) {}

  int dim() const { return n_; }
  Complex& operator()(int i, int j, int k, int l) { return data_[offset(i, j, k, l)]; }
  Complex operator()(int i, int j, int k, int l) const { return data_[offset(i, j, k, l)]; }
  const std::vector<Complex>& data() const { return data_; }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& c : data_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  std::size_t offset(int i, int j, int k, int l) const {
    assert(i >= 0 && j >= 0 && k >= 0 && l >= 0 && i < n_ && j < n_ && k < n_ && l < n_);
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  int n_ = 0;
  std::vector<Complex> data_;
};

inline double max_abs_difference(const Tensor4& a, const Tensor4& b) {
  assert(a.dim() == b.dim());
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

inline double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace chernkit
