#pragma once

#include <vector>

#include "stancelab/tensor/matrix.hpp"

// OpenMP-parallel kernels. Every kernel parallelizes over independent output
// rows (or columns) with a fixed inner summation order, so results are
// bit-identical to the serial reference in tensor::ref regardless of thread
// count or schedule.
namespace stancelab::tensor {

// c = a * b
void matmul(const Matrix& a, const Matrix& b, Matrix& c);
// c = a * b^T
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c);
// c = a^T * b
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c);

// m[i] += bias
void add_bias(Matrix& m, const std::vector<double>& bias);
// out[j] = sum_i m[i][j]  (column sums; the bias gradient)
void col_sums(const Matrix& m, std::vector<double>& out);

// In-place row softmax. Entries <= mask_threshold are treated as -inf
// (excluded) when a row has at least one entry above it.
void softmax_rows(Matrix& m);
// ds = p .* (dp - rowsum(dp .* p)), the softmax Jacobian-vector product.
void softmax_backward_rows(const Matrix& p, const Matrix& dp, Matrix& ds);

// y = (x - mean) / sqrt(var + eps) * gamma + beta, per row.
// mean/rstd caches have one entry per row.
void layer_norm_forward(const Matrix& x, const std::vector<double>& gamma,
                        const std::vector<double>& beta, double eps, Matrix& y,
                        std::vector<double>& mean, std::vector<double>& rstd);
void layer_norm_backward(const Matrix& x, const std::vector<double>& gamma,
                         const std::vector<double>& mean,
                         const std::vector<double>& rstd, const Matrix& dy,
                         Matrix& dx, std::vector<double>& dgamma,
                         std::vector<double>& dbeta);

// Exact (erf-based) GELU.
void gelu_forward(const Matrix& x, Matrix& y);
void gelu_backward(const Matrix& x, const Matrix& dy, Matrix& dx);

double squared_norm(const Matrix& m);

}  // namespace stancelab::tensor
