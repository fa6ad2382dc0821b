#include "stancelab/core/csv.hpp"

#include "stancelab/core/error.hpp"
#include "stancelab/core/io.hpp"

namespace stancelab {

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  add_row(header);
}

std::string CsvWriter::escape(const std::string& cell) {
  bool needs = cell.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != width_)
    throw Error(ErrorKind::domain, "csv row width mismatch");
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) buf_ << ',';
    buf_ << escape(cells[i]);
  }
  buf_ << '\n';
}

void CsvWriter::save(const std::filesystem::path& path) const {
  write_file(path, buf_.str());
}

std::vector<std::vector<std::string>> parse_csv(const std::string& content) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool had_any = false;
  for (size_t i = 0; i < content.size(); ++i) {
    char c = content[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      had_any = true;
      continue;
    }
    switch (c) {
      case '"': quoted = true; had_any = true; break;
      case ',': row.push_back(cell); cell.clear(); had_any = true; break;
      case '\r': break;
      case '\n':
        if (had_any || !row.empty()) {
          row.push_back(cell);
          rows.push_back(row);
        }
        row.clear();
        cell.clear();
        had_any = false;
        break;
      default: cell += c; had_any = true; break;
    }
  }
  if (had_any || !row.empty()) {
    row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<std::string>> load_csv(const std::filesystem::path& path) {
  return parse_csv(read_file(path));
}

}  // namespace stancelab
