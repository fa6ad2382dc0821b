#pragma once

#include <cstdint>
#include <filesystem>

#include "stancelab/corpus/types.hpp"

namespace stancelab::corpus::demo {

// Deterministic synthetic corpus over 12 fixture markets (5 politics,
// 5 sports, 2 finance). Class counts follow the real corpus proportions
// (63.1 / 28.2 / 8.7) via largest-remainder rounding, so total = 2229
// reproduces the published distribution exactly. Comment texts are templated
// with disjoint per-class signal vocabulary, which makes the corpus linearly
// separable for a bag-of-words model; three markets receive no Anti comments.
struct DemoSpec {
  long total = 300;
  uint64_t seed = 7;
  bool zero_anti_markets = true;
};

std::vector<Market> demo_markets();

DatasetBundle make_demo_bundle(const DemoSpec& spec);

// Per-class signal vocabulary (used by the bag-of-words test oracle).
const std::vector<std::string>& signal_words(StanceLabel label);

// Writes an offline fixture tree consumable by the ingestion layer plus a
// canned-generation file for the stub client:
//   markets/<id>.json, comments/<id>.json, markets.json, labels.jsonl,
//   stub_generations.json
void write_demo_fixtures(const std::filesystem::path& dir, const DemoSpec& spec);

// The canned Pro->Anti flip used for stub generations; a small fraction of
// sources (hash-based, deterministic) come back as pure echoes so the filter
// path gets exercised end to end.
std::string stub_flip_text(const std::string& source_id, const std::string& original);

}  // namespace stancelab::corpus::demo
