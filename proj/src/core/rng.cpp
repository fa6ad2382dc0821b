#include "stancelab/core/rng.hpp"

#include <cmath>

#include "stancelab/core/error.hpp"

namespace stancelab {

uint64_t Rng::uniform(uint64_t n) {
  if (n == 0) throw Error(ErrorKind::domain, "uniform(0) is undefined");
  // rejection sampling to avoid modulo bias
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

double Rng::uniform_real() {
  return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
}

double Rng::normal(double mean, double stddev) {
  // Box-Muller; caches the second variate for determinism and speed
  if (have_spare_) {
    have_spare_ = false;
    return mean + stddev * spare_;
  }
  double u1, u2;
  do {
    u1 = uniform_real();
  } while (u1 <= 1e-300);
  u2 = uniform_real();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return mean + stddev * r * std::cos(theta);
}

std::vector<size_t> Rng::sample_without_replacement(size_t n, size_t k) {
  if (k > n) throw Error(ErrorKind::domain, "cannot sample more than population");
  std::vector<size_t> pool(n);
  for (size_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<size_t> out;
  out.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + static_cast<size_t>(uniform(n - i));
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

uint64_t derive_seed(uint64_t base, const std::string& tag) {
  // FNV-1a over the tag, then splitmix64 finalization with the base folded in
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  uint64_t z = base + 0x9e3779b97f4a7c15ull + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace stancelab
