#include "stancelab/tensor/kernels.hpp"

#include <cassert>
#include <cmath>

#define STANCELAB_OMP_FOR _Pragma("omp parallel for schedule(static)")

namespace stancelab::tensor {

#include "kernels_body.inl"

double squared_norm(const Matrix& m) {
  // serial on purpose: used across tensors for the global clip norm and the
  // summation order must not depend on thread count
  double acc = 0.0;
  for (double v : m.d) acc += v * v;
  return acc;
}

}  // namespace stancelab::tensor
