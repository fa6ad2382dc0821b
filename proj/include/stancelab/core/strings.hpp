#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stancelab {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Maximal runs of non-whitespace characters.
std::vector<std::string> split_whitespace(std::string_view s);

std::vector<std::string> split(std::string_view s, char delim);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

// Whitespace-token count after trimming; the word count used by the
// augmentation filters.
size_t word_count(std::string_view s);

bool is_blank(std::string_view s);

// Fixed-precision decimal formatting (no locale, stable across runs).
std::string fmt_double(double v, int digits);

std::string replace_all(std::string s, const std::string& from, const std::string& to);

}  // namespace stancelab
