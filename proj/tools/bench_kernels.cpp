// Compares the OpenMP kernels against the serial reference across the sizes
// the encoder actually runs at. Build with -DCMAKE_BUILD_TYPE=Release;
// control threads via OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "stancelab/core/rng.hpp"
#include "stancelab/tensor/kernels.hpp"
#include "stancelab/tensor/reference.hpp"

using stancelab::Rng;
using stancelab::tensor::Matrix;

namespace {

Matrix random_matrix(int r, int c, uint64_t seed) {
  Rng rng(seed);
  Matrix m(r, c);
  for (double& v : m.d) v = rng.normal();
  return m;
}

void bench_matmul_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2), c;
  for (auto _ : state) {
    stancelab::tensor::ref::matmul(a, b, c);
    benchmark::DoNotOptimize(c.d.data());
  }
  state.SetItemsProcessed(state.iterations() * int64_t(n) * n * n);
}

void bench_matmul_omp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2), c;
  for (auto _ : state) {
    stancelab::tensor::matmul(a, b, c);
    benchmark::DoNotOptimize(c.d.data());
  }
  state.SetItemsProcessed(state.iterations() * int64_t(n) * n * n);
}

void bench_softmax_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix m = random_matrix(n, n, 3);
  for (auto _ : state) {
    Matrix p = m;
    stancelab::tensor::ref::softmax_rows(p);
    benchmark::DoNotOptimize(p.d.data());
  }
}

void bench_softmax_omp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix m = random_matrix(n, n, 3);
  for (auto _ : state) {
    Matrix p = m;
    stancelab::tensor::softmax_rows(p);
    benchmark::DoNotOptimize(p.d.data());
  }
}

void bench_layernorm_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix x = random_matrix(n, 768, 4), y;
  std::vector<double> gamma(768, 1.0), beta(768, 0.0), mu, rs;
  for (auto _ : state) {
    stancelab::tensor::ref::layer_norm_forward(x, gamma, beta, 1e-5, y, mu, rs);
    benchmark::DoNotOptimize(y.d.data());
  }
}

void bench_layernorm_omp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix x = random_matrix(n, 768, 4), y;
  std::vector<double> gamma(768, 1.0), beta(768, 0.0), mu, rs;
  for (auto _ : state) {
    stancelab::tensor::layer_norm_forward(x, gamma, beta, 1e-5, y, mu, rs);
    benchmark::DoNotOptimize(y.d.data());
  }
}

}  // namespace

BENCHMARK(bench_matmul_serial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bench_matmul_omp)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bench_softmax_serial)->Arg(128)->Arg(512);
BENCHMARK(bench_softmax_omp)->Arg(128)->Arg(512);
BENCHMARK(bench_layernorm_serial)->Arg(128)->Arg(512);
BENCHMARK(bench_layernorm_omp)->Arg(128)->Arg(512);

BENCHMARK_MAIN();
