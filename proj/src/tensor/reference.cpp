#include "stancelab/tensor/reference.hpp"

#include <cassert>
#include <cmath>

#define STANCELAB_OMP_FOR

namespace stancelab::tensor::ref {

#include "kernels_body.inl"

}  // namespace stancelab::tensor::ref
