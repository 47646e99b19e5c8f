#pragma once

// Text format for digit sets:
//
//   fracsq v1
//   dim <2 or 3>
//   base <N>
//   <grid>
//
// A 2D grid is N lines of N characters from {'#', '.'}; the first line is the
// top row y = N-1 and the first column is x = 0. A 3D grid is N such blocks
// separated by exactly one blank line, the first block being z = N-1. Lines
// starting with '%' after the first line are comments.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "digit_set.hpp"
#include "error.hpp"

namespace fracsq {

namespace detail {

struct NumberedLine {
  int number;
  std::string text;
};

inline bool parse_header_value(const std::string& line, std::string_view key, Coord& out) {
  if (line.size() <= key.size() + 1 || line.compare(0, key.size(), key) != 0 || line[key.size()] != ' ')
    return false;
  const char* first = line.data() + key.size() + 1;
  const char* last = line.data() + line.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace detail

// Largest base accepted in pattern text; the grid has base^dim characters.
inline constexpr Coord kMaxPatternBase = 4096;

inline DigitSet parse_pattern(std::string_view text) {
  std::vector<detail::NumberedLine> lines;
  {
    int number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(pos, end - pos));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      ++number;
      pos = end + 1;
      if (number > 1 && !line.empty() && line.front() == '%') continue;
      lines.push_back({number, std::move(line)});
    }
  }
  // Blank lines at the end of the document carry no content.
  while (!lines.empty() && lines.back().text.empty()) lines.pop_back();

  if (lines.empty() || lines[0].text != "fracsq v1")
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'fracsq v1'");
  if (lines.size() < 3) throw ParseError(lines.back().number + 1, "truncated header");

  Coord dim = 0;
  if (!detail::parse_header_value(lines[1].text, "dim", dim) || (dim != 2 && dim != 3))
    throw ParseError(lines[1].number, "expected 'dim 2' or 'dim 3'");
  Coord base = 0;
  if (!detail::parse_header_value(lines[2].text, "base", base) || base < 2 || base > kMaxPatternBase)
    throw ParseError(lines[2].number, "expected 'base <N>' with 2 <= N <= " + std::to_string(kMaxPatternBase));

  const std::size_t blocks = dim == 3 ? static_cast<std::size_t>(base) : 1;
  const std::size_t rows = static_cast<std::size_t>(base);
  const std::size_t expected = blocks * rows + (blocks - 1);
  const std::size_t available = lines.size() - 3;
  if (available != expected) {
    const int at = available < expected ? lines.back().number + 1 : lines[3 + expected].number;
    throw ParseError(at, "expected " + std::to_string(expected) + " grid lines, found " + std::to_string(available));
  }

  std::vector<Vec> digits;
  std::size_t idx = 3;
  for (std::size_t b = 0; b < blocks; ++b) {
    if (b > 0) {
      const auto& sep = lines[idx++];
      if (!sep.text.empty()) throw ParseError(sep.number, "expected a blank line between z-blocks");
    }
    for (std::size_t r = 0; r < rows; ++r) {
      const auto& line = lines[idx++];
      if (line.text.size() != rows)
        throw ParseError(line.number, "expected " + std::to_string(rows) + " characters, found " + std::to_string(line.text.size()));
      for (std::size_t col = 0; col < rows; ++col) {
        const char ch = line.text[col];
        if (ch == '#') {
          Vec d(static_cast<Coord>(col), base - 1 - static_cast<Coord>(r));
          if (dim == 3) d[2] = base - 1 - static_cast<Coord>(b);
          digits.push_back(d);
        } else if (ch != '.') {
          throw ParseError(line.number, std::string("illegal character '") + ch + "' at column " + std::to_string(col + 1));
        }
      }
    }
  }
  if (digits.empty()) throw ParseError(0, "empty digit set");
  return DigitSet(base, static_cast<int>(dim), std::move(digits));
}

inline std::string serialize_pattern(const DigitSet& d) {
  const Coord n = d.base();
  std::string out = "fracsq v1\ndim " + std::to_string(d.dim()) + "\nbase " + std::to_string(n) + "\n";
  const Coord blocks = d.dim() == 3 ? n : 1;
  for (Coord b = 0; b < blocks; ++b) {
    if (b > 0) out += '\n';
    for (Coord r = 0; r < n; ++r) {
      for (Coord x = 0; x < n; ++x) {
        Vec v(x, n - 1 - r);
        if (d.dim() == 3) v[2] = n - 1 - b;
        out += d.contains(v) ? '#' : '.';
      }
      out += '\n';
    }
  }
  return out;
}

inline DigitSet read_pattern_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("pattern", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pattern(buf.str());
}

}  // namespace fracsq
