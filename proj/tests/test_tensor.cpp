#include <doctest.h>

#include <cmath>

#include "stancelab/core/rng.hpp"
#include "stancelab/tensor/kernels.hpp"
#include "stancelab/tensor/reference.hpp"

using namespace stancelab;
using tensor::Matrix;

namespace {

Matrix random_matrix(int r, int c, Rng& rng, double scale = 1.0) {
  Matrix m(r, c);
  for (double& v : m.d) v = rng.normal(0.0, scale);
  return m;
}

bool bit_equal(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a.d[i] != b.d[i]) return false;
  return true;
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("parallel kernels match serial reference bit for bit") {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    int m = 1 + static_cast<int>(rng.uniform(40));
    int k = 1 + static_cast<int>(rng.uniform(40));
    int n = 1 + static_cast<int>(rng.uniform(40));
    Matrix a = random_matrix(m, k, rng);
    Matrix b = random_matrix(k, n, rng);
    Matrix c1, c2;
    tensor::matmul(a, b, c1);
    tensor::ref::matmul(a, b, c2);
    CHECK(bit_equal(c1, c2));

    Matrix bt = random_matrix(n, k, rng);
    tensor::matmul_nt(a, bt, c1);
    tensor::ref::matmul_nt(a, bt, c2);
    CHECK(bit_equal(c1, c2));

    Matrix a2 = random_matrix(k, m, rng);
    tensor::matmul_tn(a2, b, c1);
    tensor::ref::matmul_tn(a2, b, c2);
    CHECK(bit_equal(c1, c2));

    Matrix s1 = random_matrix(m, n, rng), s2 = s1;
    tensor::softmax_rows(s1);
    tensor::ref::softmax_rows(s2);
    CHECK(bit_equal(s1, s2));

    Matrix x = random_matrix(m, k, rng);
    std::vector<double> gamma(k), beta(k);
    for (int j = 0; j < k; ++j) {
      gamma[j] = 1.0 + 0.1 * rng.normal();
      beta[j] = 0.1 * rng.normal();
    }
    Matrix y1, y2;
    std::vector<double> mu1, rs1, mu2, rs2;
    tensor::layer_norm_forward(x, gamma, beta, 1e-5, y1, mu1, rs1);
    tensor::ref::layer_norm_forward(x, gamma, beta, 1e-5, y2, mu2, rs2);
    CHECK(bit_equal(y1, y2));

    Matrix g1, g2;
    tensor::gelu_forward(x, g1);
    tensor::ref::gelu_forward(x, g2);
    CHECK(bit_equal(g1, g2));
  }
}

TEST_CASE("matmul against naive triple loop") {
  Rng rng(3);
  Matrix a = random_matrix(7, 5, rng);
  Matrix b = random_matrix(5, 9, rng);
  Matrix c;
  tensor::matmul(a, b, c);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 9; ++j) {
      double acc = 0;
      for (int k = 0; k < 5; ++k) acc += a.at(i, k) * b.at(k, j);
      CHECK(c.at(i, j) == doctest::Approx(acc).epsilon(1e-12));
    }
}

TEST_CASE("softmax rows sum to one and handle masks") {
  Rng rng(4);
  Matrix m = random_matrix(6, 10, rng, 3.0);
  // mask out the tail of each row the way attention does
  for (int i = 0; i < m.rows; ++i)
    for (int j = 7; j < 10; ++j) m.at(i, j) = -1e30;
  tensor::softmax_rows(m);
  for (int i = 0; i < m.rows; ++i) {
    double sum = 0;
    for (int j = 0; j < m.cols; ++j) sum += m.at(i, j);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    for (int j = 7; j < 10; ++j) CHECK(m.at(i, j) == 0.0);
  }
}

TEST_CASE("layer norm backward matches finite differences") {
  Rng rng(9);
  const int rows = 4, cols = 6;
  Matrix x = random_matrix(rows, cols, rng);
  std::vector<double> gamma(cols), beta(cols);
  for (int j = 0; j < cols; ++j) {
    gamma[j] = 1.0 + 0.2 * rng.normal();
    beta[j] = 0.1 * rng.normal();
  }
  Matrix dy = random_matrix(rows, cols, rng);

  auto objective = [&](const Matrix& xv) {
    Matrix y;
    std::vector<double> mu, rs;
    tensor::layer_norm_forward(xv, gamma, beta, 1e-5, y, mu, rs);
    double acc = 0;
    for (size_t i = 0; i < y.size(); ++i) acc += y.d[i] * dy.d[i];
    return acc;
  };

  Matrix y, dx;
  std::vector<double> mu, rs, dgamma, dbeta;
  tensor::layer_norm_forward(x, gamma, beta, 1e-5, y, mu, rs);
  tensor::layer_norm_backward(x, gamma, mu, rs, dy, dx, dgamma, dbeta);

  const double h = 1e-6;
  for (int t = 0; t < 10; ++t) {
    size_t i = rng.uniform(x.size());
    Matrix xp = x, xm = x;
    xp.d[i] += h;
    xm.d[i] -= h;
    double fd = (objective(xp) - objective(xm)) / (2 * h);
    CHECK(dx.d[i] == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("gelu backward matches finite differences") {
  Rng rng(13);
  Matrix x = random_matrix(3, 5, rng);
  Matrix dy = random_matrix(3, 5, rng);
  Matrix y, dx;
  tensor::gelu_forward(x, y);
  tensor::gelu_backward(x, dy, dx);
  const double h = 1e-6;
  for (size_t i = 0; i < x.size(); ++i) {
    Matrix xp = x, xm = x;
    xp.d[i] += h;
    xm.d[i] -= h;
    Matrix yp, ym;
    tensor::gelu_forward(xp, yp);
    tensor::gelu_forward(xm, ym);
    double fd = (yp.d[i] - ym.d[i]) / (2 * h) * dy.d[i];
    CHECK(dx.d[i] == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("softmax backward matches finite differences") {
  Rng rng(17);
  Matrix s = random_matrix(3, 6, rng);
  Matrix dp = random_matrix(3, 6, rng);
  Matrix p = s;
  tensor::softmax_rows(p);
  Matrix ds;
  tensor::softmax_backward_rows(p, dp, ds);

  auto objective = [&](const Matrix& sv) {
    Matrix pv = sv;
    tensor::softmax_rows(pv);
    double acc = 0;
    for (size_t i = 0; i < pv.size(); ++i) acc += pv.d[i] * dp.d[i];
    return acc;
  };
  const double h = 1e-6;
  for (size_t i = 0; i < s.size(); ++i) {
    Matrix sp = s, sm = s;
    sp.d[i] += h;
    sm.d[i] -= h;
    double fd = (objective(sp) - objective(sm)) / (2 * h);
    CHECK(ds.d[i] == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("col_sums and add_bias") {
  Rng rng(21);
  Matrix m = random_matrix(5, 4, rng);
  std::vector<double> sums;
  tensor::col_sums(m, sums);
  for (int j = 0; j < 4; ++j) {
    double acc = 0;
    for (int i = 0; i < 5; ++i) acc += m.at(i, j);
    CHECK(sums[j] == doctest::Approx(acc).epsilon(1e-12));
  }
  Matrix m2 = m;
  std::vector<double> bias{1, 2, 3, 4};
  tensor::add_bias(m2, bias);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(m2.at(i, j) == doctest::Approx(m.at(i, j) + bias[j]));
}

}  // TEST_SUITE
