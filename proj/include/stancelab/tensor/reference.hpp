#pragma once

#include <vector>

#include "stancelab/tensor/matrix.hpp"

// Serial reference implementations of every kernel in tensor/kernels.hpp.
// Kept for testing (the parallel kernels must match them bit-for-bit) and for
// the serial-vs-parallel benchmark.
namespace stancelab::tensor::ref {

void matmul(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& c);
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& c);
void add_bias(Matrix& m, const std::vector<double>& bias);
void col_sums(const Matrix& m, std::vector<double>& out);
void softmax_rows(Matrix& m);
void softmax_backward_rows(const Matrix& p, const Matrix& dp, Matrix& ds);
void layer_norm_forward(const Matrix& x, const std::vector<double>& gamma,
                        const std::vector<double>& beta, double eps, Matrix& y,
                        std::vector<double>& mean, std::vector<double>& rstd);
void layer_norm_backward(const Matrix& x, const std::vector<double>& gamma,
                         const std::vector<double>& mean,
                         const std::vector<double>& rstd, const Matrix& dy,
                         Matrix& dx, std::vector<double>& dgamma,
                         std::vector<double>& dbeta);
void gelu_forward(const Matrix& x, Matrix& y);
void gelu_backward(const Matrix& x, const Matrix& dy, Matrix& dx);

}  // namespace stancelab::tensor::ref
