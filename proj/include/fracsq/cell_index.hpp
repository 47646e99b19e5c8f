#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vec.hpp"

namespace fracsq {

/// Cells of one level: integer vectors c standing for the cube
/// (c + [0,1]^dim) / base^level. Coordinates of translated sets may fall
/// outside [0, base^level - 1].
struct CellSet {
  int level = 1;
  Coord base = 2;
  int dim = 2;
  std::vector<Vec> cells;
};

/// Lookup table from cell coordinates to positions in a cell list.
///
/// Coordinates are flattened to mixed-radix keys over the bounding box. A
/// dense table is used when the box is small relative to the cell count,
/// otherwise a sorted key array with binary search.
class CellIndex {
 public:
  static constexpr std::int64_t npos = -1;

  CellIndex(std::span<const Vec> cells, int dim) : dim_(dim) {
    if (cells.empty()) return;
    lo_ = hi_ = cells.front();
    for (const auto& c : cells)
      for (int i = 0; i < dim_; ++i) {
        lo_[i] = std::min(lo_[i], c[i]);
        hi_[i] = std::max(hi_[i], c[i]);
      }
    unsigned __int128 volume = 1;
    for (int i = 0; i < dim_; ++i) {
      stride_[i] = static_cast<std::uint64_t>(volume);
      volume *= static_cast<unsigned __int128>(hi_[i] - lo_[i] + 1);
      if (volume > std::numeric_limits<std::uint64_t>::max() / 2)
        throw Error("cell_index", "bounding box too large for flat keys");
    }
    const auto n = static_cast<std::uint64_t>(cells.size());
    const auto vol = static_cast<std::uint64_t>(volume);
    dense_ = vol <= kDenseCap && vol <= std::max<std::uint64_t>(16 * n, std::uint64_t{1} << 16);
    if (dense_) {
      table_.assign(vol, kEmpty);
      for (std::uint32_t i = 0; i < cells.size(); ++i) table_[key(cells[i])] = i;
    } else {
      sorted_.reserve(cells.size());
      for (std::uint32_t i = 0; i < cells.size(); ++i) sorted_.emplace_back(key(cells[i]), i);
      std::sort(sorted_.begin(), sorted_.end());
    }
  }

  /// Position of `v` in the indexed list, or npos.
  std::int64_t find(const Vec& v) const {
    if (!in_box(v)) return npos;
    const auto k = key(v);
    if (dense_) return table_[k] == kEmpty ? npos : static_cast<std::int64_t>(table_[k]);
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::pair<std::uint64_t, std::uint32_t>{k, 0});
    return it != sorted_.end() && it->first == k ? static_cast<std::int64_t>(it->second) : npos;
  }

  bool contains(const Vec& v) const { return find(v) != npos; }

 private:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint64_t kDenseCap = std::uint64_t{1} << 28;

  bool in_box(const Vec& v) const {
    if (sorted_.empty() && table_.empty()) return false;
    for (int i = 0; i < dim_; ++i)
      if (v[i] < lo_[i] || v[i] > hi_[i]) return false;
    return true;
  }

  std::uint64_t key(const Vec& v) const {
    std::uint64_t k = 0;
    for (int i = 0; i < dim_; ++i) k += static_cast<std::uint64_t>(v[i] - lo_[i]) * stride_[i];
    return k;
  }

  int dim_;
  Vec lo_, hi_;
  std::uint64_t stride_[kMaxDim] = {};
  bool dense_ = false;
  std::vector<std::uint32_t> table_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> sorted_;
};

}  // namespace fracsq
