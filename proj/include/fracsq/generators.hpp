#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "digit_set.hpp"
#include "error.hpp"

namespace fracsq {

/// Digit set over base m² whose attractor has exactly m components (m >= 5):
/// m staircases A + (km, 0) of m vertical steps each, plus two long columns B
/// hanging off the first and last staircase.
inline DigitSet generate_exact_m(int m) {
  if (m < 5) throw Error("core_model", "the exact-m construction is defined for m >= 5, got " + std::to_string(m));
  if (m > 1024) throw Error("core_model", "m too large");
  const Coord n = static_cast<Coord>(m) * m;
  std::vector<Vec> digits;
  for (Coord j = 2 * m; j <= n - 1; ++j) {
    digits.emplace_back(0, j);
    digits.emplace_back(n - 1, n - 1 - j);
  }
  for (Coord k = 0; k < m; ++k)
    for (Coord i = 0; i < m; ++i)
      for (Coord j = i * m; j <= (i + 1) * m - 1; ++j) digits.emplace_back(i + k * m, j);
  return DigitSet(n, 2, std::move(digits));
}

namespace detail {

inline DigitSet carpet() {
  std::vector<Vec> d;
  for (Coord x = 0; x < 3; ++x)
    for (Coord y = 0; y < 3; ++y)
      if (x != 1 || y != 1) d.emplace_back(x, y);
  return DigitSet(3, 2, std::move(d));
}

inline DigitSet two_pillars() {
  std::vector<Vec> d;
  for (Coord y = 0; y < 3; ++y) {
    d.emplace_back(0, y);
    d.emplace_back(2, y);
  }
  return DigitSet(3, 2, std::move(d));
}

inline DigitSet example21_like() {
  std::vector<Vec> left;
  for (Coord i = 0; i <= 4; ++i) left.emplace_back(0, i);
  for (Coord x : {1, 2})
    for (Coord y : {3, 4}) left.emplace_back(x, y);
  std::vector<Vec> d = left;
  for (const auto& v : left) d.emplace_back(4 - v[0], 4 - v[1]);
  return DigitSet(5, 2, std::move(d));
}

// Accepts "exact_m(5)" and "exact_m:5".
inline bool parse_exact_m(std::string_view name, int& m) {
  constexpr std::string_view prefix = "exact_m";
  if (name.substr(0, prefix.size()) != prefix) return false;
  name.remove_prefix(prefix.size());
  if (name.size() >= 3 && name.front() == '(' && name.back() == ')')
    name = name.substr(1, name.size() - 2);
  else if (name.size() >= 2 && name.front() == ':')
    name.remove_prefix(1);
  else
    return false;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), m);
  return ec == std::errc() && ptr == name.data() + name.size();
}

}  // namespace detail

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"carpet", "two_pillars", "diag_pair", "diag3d", "example21_like", "exact_m(m)"};
  return names;
}

/// Named fixtures: carpet, two_pillars, diag_pair, diag3d, example21_like,
/// exact_m(m).
inline DigitSet builtin(std::string_view name) {
  if (name == "carpet") return detail::carpet();
  if (name == "two_pillars") return detail::two_pillars();
  if (name == "diag_pair") return DigitSet(2, 2, {{0, 0}, {1, 1}});
  if (name == "diag3d") return DigitSet(2, 3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  if (name == "example21_like") return detail::example21_like();
  if (int m = 0; detail::parse_exact_m(name, m)) return generate_exact_m(m);
  throw Error("core_model", "unknown builtin '" + std::string(name) + "'");
}

}  // namespace fracsq
