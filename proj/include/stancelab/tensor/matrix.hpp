#pragma once

#include <cstddef>
#include <vector>

namespace stancelab::tensor {

// Dense row-major double matrix. The whole training stack runs in double so
// finite-difference gradient checks stay meaningful.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> d;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), d(static_cast<size_t>(r) * c, 0.0) {}

  double* row(int i) { return d.data() + static_cast<size_t>(i) * cols; }
  const double* row(int i) const { return d.data() + static_cast<size_t>(i) * cols; }
  double& at(int i, int j) { return d[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return d[static_cast<size_t>(i) * cols + j]; }
  size_t size() const { return d.size(); }
  void fill(double v) { std::fill(d.begin(), d.end(), v); }
  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

}  // namespace stancelab::tensor
