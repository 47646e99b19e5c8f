#pragma once

// Pillars and the vertical-like / horizontal-like predicates (2D only).

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "digit_set.hpp"
#include "error.hpp"
#include "partition.hpp"

namespace fracsq {

/// Maximal vertical run {(x, bottom), ..., (x, top)} of digits.
struct Pillar {
  Coord x = 0;
  Coord bottom = 0;
  Coord top = 0;

  Coord size() const noexcept { return top - bottom + 1; }
  friend bool operator==(const Pillar&, const Pillar&) = default;
};

inline void require_planar(const DigitSet& d, const char* what) {
  if (d.dim() != 2) throw Error("core_model", std::string(what) + " requires dim 2");
}

/// Pillars ordered by column, then by bottom row.
inline std::vector<Pillar> pillars(const DigitSet& d) {
  require_planar(d, "pillars");
  std::vector<Pillar> out;
  // Canonical order is (x, y) lexicographic, so runs are contiguous.
  for (const auto& digit : d.digits()) {
    if (!out.empty() && out.back().x == digit[0] && out.back().top + 1 == digit[1])
      out.back().top = digit[1];
    else
      out.push_back({digit[0], digit[1], digit[1]});
  }
  return out;
}

struct ShapeFlags {
  std::vector<bool> vertical_like;    // per component
  std::vector<bool> horizontal_like;  // per component
  bool all_vertical_like = true;
  bool all_horizontal_like = true;
};

inline ShapeFlags shape_predicates(const DigitSet& d, const Partition<Vec>& parts) {
  require_planar(d, "shape predicates");
  const Coord top = d.base() - 1;
  std::vector<bool> bottom_row(static_cast<std::size_t>(parts.count)), top_row(bottom_row), left(bottom_row), right(bottom_row);
  for (std::size_t i = 0; i < parts.elements.size(); ++i) {
    const auto& v = parts.elements[i];
    const auto c = static_cast<std::size_t>(parts.label[i]);
    if (v[1] == 0) bottom_row[c] = true;
    if (v[1] == top) top_row[c] = true;
    if (v[0] == 0) left[c] = true;
    if (v[0] == top) right[c] = true;
  }
  ShapeFlags f;
  for (std::size_t c = 0; c < bottom_row.size(); ++c) {
    f.vertical_like.push_back(bottom_row[c] && top_row[c]);
    f.horizontal_like.push_back(left[c] && right[c]);
    f.all_vertical_like = f.all_vertical_like && f.vertical_like.back();
    f.all_horizontal_like = f.all_horizontal_like && f.horizontal_like.back();
  }
  return f;
}

/// Component ids sorted left to right by their minimum x. Every component
/// must be vertical-like. Bottom-to-top chains of distinct components cannot
/// cross, so each component lies on one side of the other's chain and the
/// minimum x values are distinct. Branches may still interleave within a row.
inline std::vector<int> arrange_left_to_right(const DigitSet& d, const Partition<Vec>& parts) {
  const auto flags = shape_predicates(d, parts);
  if (!flags.all_vertical_like) throw Error("core_model", "left-to-right order requires every component to be vertical-like");

  const auto count = static_cast<std::size_t>(parts.count);
  std::vector<Coord> min_x(count, std::numeric_limits<Coord>::max());
  for (std::size_t i = 0; i < parts.elements.size(); ++i) {
    auto& mx = min_x[static_cast<std::size_t>(parts.label[i])];
    mx = std::min(mx, parts.elements[i][0]);
  }
  std::vector<int> order(count);
  for (std::size_t c = 0; c < count; ++c) order[c] = static_cast<int>(c);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return min_x[static_cast<std::size_t>(a)] < min_x[static_cast<std::size_t>(b)]; });
  for (std::size_t k = 1; k < count; ++k)
    if (min_x[static_cast<std::size_t>(order[k - 1])] == min_x[static_cast<std::size_t>(order[k])])
      throw std::logic_error("core_model: two vertical-like components share their leftmost column");
  return order;
}

}  // namespace fracsq
