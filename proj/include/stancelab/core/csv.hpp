#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

namespace stancelab {

// Minimal CSV writer with RFC-style quoting. Rows are flushed to an internal
// buffer; call save() or str() when done.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void add_row(const std::vector<std::string>& cells);
  std::string str() const { return buf_.str(); }
  void save(const std::filesystem::path& path) const;

  static std::string escape(const std::string& cell);

 private:
  std::ostringstream buf_;
  size_t width_;
};

// Parses CSV content produced by CsvWriter (quoted fields, embedded commas,
// quotes and newlines). Returns rows including the header row.
std::vector<std::vector<std::string>> parse_csv(const std::string& content);

std::vector<std::vector<std::string>> load_csv(const std::filesystem::path& path);

}  // namespace stancelab
