#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace stancelab {

std::string read_file(const std::filesystem::path& path);

// Writes via a temp file in the same directory, then renames.
void write_file(const std::filesystem::path& path, const std::string& content);

std::vector<std::string> read_lines(const std::filesystem::path& path);

// SHA-256 hex digest.
std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

// 64-bit FNV-1a, used for cheap in-memory fingerprints (parameter hashes).
uint64_t fnv1a64(const void* data, size_t len);

std::string iso8601_utc_now();

}  // namespace stancelab
