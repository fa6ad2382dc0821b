// Kernel bodies shared by the OpenMP build (kernels.cpp) and the serial
// reference (reference.cpp). The including file defines STANCELAB_OMP_FOR to
// either an omp pragma or nothing. Inner summation order is identical in both
// builds, so outputs match bit-for-bit.
//
// Expects to be included inside the target namespace with <cmath>, <cassert>
// available.

void matmul(const Matrix& a, const Matrix& b, Matrix& c) {
  assert(a.cols == b.rows);
  c = Matrix(a.rows, b.cols);
  const int m = a.rows, k = a.cols, n = b.cols;
  STANCELAB_OMP_FOR
  for (int i = 0; i < m; ++i) {
    double* crow = c.row(i);
    const double* arow = a.row(i);
    for (int p = 0; p < k; ++p) {
      const double aip = arow[p];
      const double* brow = b.row(p);
      for (int j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c) {
  assert(a.cols == b.cols);
  c = Matrix(a.rows, b.rows);
  const int m = a.rows, k = a.cols, n = b.rows;
  STANCELAB_OMP_FOR
  for (int i = 0; i < m; ++i) {
    const double* arow = a.row(i);
    double* crow = c.row(i);
    for (int j = 0; j < n; ++j) {
      const double* brow = b.row(j);
      double acc = 0.0;
      for (int p = 0; p < k; ++p) acc += arow[p] * brow[p];
      crow[j] = acc;
    }
  }
}

void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c) {
  assert(a.rows == b.rows);
  c = Matrix(a.cols, b.cols);
  const int m = a.cols, k = a.rows, n = b.cols;
  STANCELAB_OMP_FOR
  for (int i = 0; i < m; ++i) {
    double* crow = c.row(i);
    for (int p = 0; p < k; ++p) {
      const double api = a.at(p, i);
      const double* brow = b.row(p);
      for (int j = 0; j < n; ++j) crow[j] += api * brow[j];
    }
  }
}

void add_bias(Matrix& m, const std::vector<double>& bias) {
  assert(static_cast<int>(bias.size()) == m.cols);
  STANCELAB_OMP_FOR
  for (int i = 0; i < m.rows; ++i) {
    double* row = m.row(i);
    for (int j = 0; j < m.cols; ++j) row[j] += bias[j];
  }
}

void col_sums(const Matrix& m, std::vector<double>& out) {
  out.assign(m.cols, 0.0);
  STANCELAB_OMP_FOR
  for (int j = 0; j < m.cols; ++j) {
    double acc = 0.0;
    for (int i = 0; i < m.rows; ++i) acc += m.at(i, j);
    out[j] = acc;
  }
}

void softmax_rows(Matrix& m) {
  STANCELAB_OMP_FOR
  for (int i = 0; i < m.rows; ++i) {
    double* row = m.row(i);
    double mx = row[0];
    for (int j = 1; j < m.cols; ++j) mx = std::max(mx, row[j]);
    double sum = 0.0;
    for (int j = 0; j < m.cols; ++j) {
      row[j] = std::exp(row[j] - mx);
      sum += row[j];
    }
    if (sum <= 0.0) {
      // fully masked row; keep it a valid distribution
      for (int j = 0; j < m.cols; ++j) row[j] = 1.0 / m.cols;
    } else {
      const double inv = 1.0 / sum;
      for (int j = 0; j < m.cols; ++j) row[j] *= inv;
    }
  }
}

void softmax_backward_rows(const Matrix& p, const Matrix& dp, Matrix& ds) {
  assert(p.same_shape(dp));
  ds = Matrix(p.rows, p.cols);
  STANCELAB_OMP_FOR
  for (int i = 0; i < p.rows; ++i) {
    const double* prow = p.row(i);
    const double* dprow = dp.row(i);
    double* dsrow = ds.row(i);
    double dot = 0.0;
    for (int j = 0; j < p.cols; ++j) dot += dprow[j] * prow[j];
    for (int j = 0; j < p.cols; ++j) dsrow[j] = prow[j] * (dprow[j] - dot);
  }
}

void layer_norm_forward(const Matrix& x, const std::vector<double>& gamma,
                        const std::vector<double>& beta, double eps, Matrix& y,
                        std::vector<double>& mean, std::vector<double>& rstd) {
  assert(static_cast<int>(gamma.size()) == x.cols);
  y = Matrix(x.rows, x.cols);
  mean.assign(x.rows, 0.0);
  rstd.assign(x.rows, 0.0);
  const int n = x.cols;
  STANCELAB_OMP_FOR
  for (int i = 0; i < x.rows; ++i) {
    const double* xrow = x.row(i);
    double mu = 0.0;
    for (int j = 0; j < n; ++j) mu += xrow[j];
    mu /= n;
    double var = 0.0;
    for (int j = 0; j < n; ++j) {
      const double dv = xrow[j] - mu;
      var += dv * dv;
    }
    var /= n;
    const double rs = 1.0 / std::sqrt(var + eps);
    mean[i] = mu;
    rstd[i] = rs;
    double* yrow = y.row(i);
    for (int j = 0; j < n; ++j) yrow[j] = (xrow[j] - mu) * rs * gamma[j] + beta[j];
  }
}

void layer_norm_backward(const Matrix& x, const std::vector<double>& gamma,
                         const std::vector<double>& mean,
                         const std::vector<double>& rstd, const Matrix& dy,
                         Matrix& dx, std::vector<double>& dgamma,
                         std::vector<double>& dbeta) {
  assert(x.same_shape(dy));
  dx = Matrix(x.rows, x.cols);
  const int n = x.cols;
  STANCELAB_OMP_FOR
  for (int i = 0; i < x.rows; ++i) {
    const double* xrow = x.row(i);
    const double* dyrow = dy.row(i);
    double* dxrow = dx.row(i);
    const double mu = mean[i], rs = rstd[i];
    double sum_g = 0.0, sum_gx = 0.0;
    for (int j = 0; j < n; ++j) {
      const double xhat = (xrow[j] - mu) * rs;
      const double g = dyrow[j] * gamma[j];
      sum_g += g;
      sum_gx += g * xhat;
    }
    const double inv_n = 1.0 / n;
    for (int j = 0; j < n; ++j) {
      const double xhat = (xrow[j] - mu) * rs;
      const double g = dyrow[j] * gamma[j];
      dxrow[j] = rs * (g - inv_n * sum_g - xhat * inv_n * sum_gx);
    }
  }
  // parameter grads: column reductions, fixed row order per column
  dgamma.assign(n, 0.0);
  dbeta.assign(n, 0.0);
  STANCELAB_OMP_FOR
  for (int j = 0; j < n; ++j) {
    double dg = 0.0, db = 0.0;
    for (int i = 0; i < x.rows; ++i) {
      const double xhat = (x.at(i, j) - mean[i]) * rstd[i];
      dg += dy.at(i, j) * xhat;
      db += dy.at(i, j);
    }
    dgamma[j] = dg;
    dbeta[j] = db;
  }
}

void gelu_forward(const Matrix& x, Matrix& y) {
  y = Matrix(x.rows, x.cols);
  static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  STANCELAB_OMP_FOR
  for (int i = 0; i < x.rows; ++i) {
    const double* xrow = x.row(i);
    double* yrow = y.row(i);
    for (int j = 0; j < x.cols; ++j) {
      const double v = xrow[j];
      yrow[j] = 0.5 * v * (1.0 + std::erf(v * inv_sqrt2));
    }
  }
}

void gelu_backward(const Matrix& x, const Matrix& dy, Matrix& dx) {
  assert(x.same_shape(dy));
  dx = Matrix(x.rows, x.cols);
  static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  static const double inv_sqrt2pi = 1.0 / std::sqrt(2.0 * M_PI);
  STANCELAB_OMP_FOR
  for (int i = 0; i < x.rows; ++i) {
    const double* xrow = x.row(i);
    const double* dyrow = dy.row(i);
    double* dxrow = dx.row(i);
    for (int j = 0; j < x.cols; ++j) {
      const double v = xrow[j];
      const double cdf = 0.5 * (1.0 + std::erf(v * inv_sqrt2));
      const double pdf = inv_sqrt2pi * std::exp(-0.5 * v * v);
      dxrow[j] = dyrow[j] * (cdf + v * pdf);
    }
  }
}
