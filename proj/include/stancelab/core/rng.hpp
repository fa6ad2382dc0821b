#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace stancelab {

// Deterministic RNG wrapper. All shuffles and samplers in the pipeline go
// through this class instead of std::shuffle / std::uniform_int_distribution,
// whose outputs are implementation-defined; results are reproducible for a
// given seed independent of the standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Unbiased integer in [0, n). n must be > 0.
  uint64_t uniform(uint64_t n);

  // Double in [0, 1) with 53 bits of randomness.
  double uniform_real();

  double normal(double mean = 0.0, double stddev = 1.0);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    // Fisher-Yates, high-to-low
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct indices drawn uniformly from [0, n), in draw order.
  std::vector<size_t> sample_without_replacement(size_t n, size_t k);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Mixes a base seed with a textual tag so that independent pipeline stages
// draw from unrelated streams.
uint64_t derive_seed(uint64_t base, const std::string& tag);

}  // namespace stancelab
