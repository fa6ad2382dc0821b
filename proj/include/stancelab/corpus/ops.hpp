#pragma once

#include <array>
#include <cstdint>

#include "stancelab/corpus/types.hpp"

namespace stancelab::corpus {

struct SplitRatios {
  double train = 0.70;
  double val = 0.15;
  double test = 0.15;
};

Distribution class_distribution(const DatasetBundle& bundle);

// Deterministic stratified assignment. Split totals follow the two-stage
// convention (test count rounded up first, then val from the remainder); the
// per-class allocation is a controlled rounding of the class x split target
// matrix, so every cell is within one example of exact proportionality while
// row and column sums are met exactly.
DatasetBundle stratified_split(const DatasetBundle& bundle, const SplitRatios& ratios,
                               uint64_t seed);

// Drops Neutral examples and flips the scheme tag. Survivor order preserved.
DatasetBundle project_two_class(const DatasetBundle& bundle);

}  // namespace stancelab::corpus
