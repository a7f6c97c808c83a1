#pragma once
// Line-oriented parsing helpers shared by the text formats.

#include "omegalab/errors.hpp"

#include <charconv>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace omegalab::detail {

/// Splits on single spaces; empty fields (double spaces, trailing space) are errors.
inline std::vector<std::string_view> split_fields(std::string_view line, std::size_t lineno) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t sp = line.find(' ', pos);
    std::string_view field = line.substr(pos, sp == std::string_view::npos ? std::string_view::npos : sp - pos);
    if (field.empty()) throw ParseError(lineno, "empty field");
    out.push_back(field);
    if (sp == std::string_view::npos) break;
    pos = sp + 1;
  }
  return out;
}

inline std::size_t parse_index(std::string_view field, std::size_t lineno) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError(lineno, "expected a non-negative integer, got '" + std::string(field) + "'");
  if (field.size() > 1 && field[0] == '0') throw ParseError(lineno, "leading zero in '" + std::string(field) + "'");
  return value;
}

/// Reads all lines; a trailing '\r' is rejected rather than silently dropped.
inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') throw ParseError(lines.size() + 1, "carriage return in line");
    lines.push_back(line);
  }
  return lines;
}

} // namespace omegalab::detail
