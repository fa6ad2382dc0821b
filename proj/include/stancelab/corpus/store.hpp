#pragma once

#include <filesystem>

#include "stancelab/corpus/types.hpp"

namespace stancelab::corpus {

// Line-delimited JSON dataset file. First line is a schema-version header
// carrying the class scheme, followed by one record per market and one per
// example. Save/load round-trips every field.
inline constexpr int kDatasetSchemaVersion = 1;

void save_dataset(const DatasetBundle& bundle, const std::filesystem::path& path);
DatasetBundle load_dataset(const std::filesystem::path& path);

}  // namespace stancelab::corpus
