#pragma once

// Exact test for F ∩ (F + v) ≠ ∅ with integer v.
//
// Since F = ∪_{d∈D} (F + d)/N and F ⊆ [0,1]^dim, the intersection with offset
// v is nonempty iff for some digits d, e the intersection with offset
// w = N·v + e - d is nonempty, and only |w|_∞ <= 1 can ever succeed. This
// gives a transition system on the 3^dim offsets of norm at most 1. A state is
// alive (intersection nonempty) iff it starts an infinite path, i.e. the alive
// set is the greatest set in which every state keeps a successor.

#include <span>
#include <vector>

#include "cell_index.hpp"
#include "digit_set.hpp"
#include "error.hpp"
#include "vec.hpp"

namespace fracsq {

class OffsetAutomaton {
 public:
  explicit OffsetAutomaton(const DigitSet& d) : dim_(d.dim()), base_(d.base()) {
    const int n = neighborhood_size(dim_);
    successors_.resize(static_cast<std::size_t>(n));
    CellIndex digits(d.digits(), dim_);

    // delta ∈ D - D iff some digit e has e - delta ∈ D.
    auto is_difference = [&](const Vec& delta) {
      for (int i = 0; i < dim_; ++i)
        if (delta[i] <= -base_ || delta[i] >= base_) return false;
      for (const auto& e : d.digits())
        if (digits.contains(e - delta)) return true;
      return false;
    };

    for (int s = 0; s < n; ++s) {
      const Vec v = unit_offset(s, dim_);
      for (int t = 0; t < n; ++t) {
        const Vec w = unit_offset(t, dim_);
        if (is_difference(w - base_ * v)) successors_[static_cast<std::size_t>(s)].push_back(t);
      }
    }

    // Greatest fixed point: drop states without a live successor until stable.
    alive_.assign(static_cast<std::size_t>(n), true);
    for (bool changed = true; changed;) {
      changed = false;
      for (int s = 0; s < n; ++s) {
        if (!alive_[static_cast<std::size_t>(s)]) continue;
        bool keep = false;
        for (int t : successors_[static_cast<std::size_t>(s)]) keep = keep || alive_[static_cast<std::size_t>(t)];
        if (!keep) {
          alive_[static_cast<std::size_t>(s)] = false;
          changed = true;
        }
      }
    }

    for (int s = 0; s < n; ++s)
      if (alive_[static_cast<std::size_t>(s)]) alive_offsets_.push_back(unit_offset(s, dim_));
  }

  int dim() const noexcept { return dim_; }
  Coord base() const noexcept { return base_; }
  int state_count() const noexcept { return neighborhood_size(dim_); }

  /// F ∩ (F + v) ≠ ∅. Coordinates beyond dim() must be zero.
  bool nonempty(const Vec& v) const {
    for (int i = dim_; i < kMaxDim; ++i)
      if (v[i] != 0) throw Error("intersection_oracle", "offset dimension mismatch");
    return chebyshev(v) <= 1 && alive_[static_cast<std::size_t>(unit_offset_code(v, dim_))];
  }

  bool nonempty(std::span<const Coord> v) const {
    if (static_cast<int>(v.size()) != dim_) throw Error("intersection_oracle", "offset dimension mismatch");
    Vec w;
    for (int i = 0; i < dim_; ++i) w[i] = v[static_cast<std::size_t>(i)];
    return nonempty(w);
  }

  /// Offsets of norm <= 1 with nonempty intersection, in state order.
  std::span<const Vec> alive_offsets() const noexcept { return alive_offsets_; }

  /// Transition targets of state `code` (see unit_offset).
  std::span<const int> successors(int code) const { return successors_.at(static_cast<std::size_t>(code)); }

 private:
  int dim_;
  Coord base_;
  std::vector<std::vector<int>> successors_;
  std::vector<bool> alive_;
  std::vector<Vec> alive_offsets_;
};

/// Whether the union of level-k copies of F over `s` meets the union over `t`.
inline bool cells_intersect(const OffsetAutomaton& a, const CellSet& s, const CellSet& t) {
  if (s.level != t.level || s.base != t.base || s.dim != t.dim)
    throw Error("intersection_oracle", "cell sets differ in level, base or dimension");
  if (s.dim != a.dim()) throw Error("intersection_oracle", "cell set dimension does not match the automaton");
  if (s.cells.empty() || t.cells.empty()) return false;
  const CellIndex index(t.cells, t.dim);
  for (const auto& c : s.cells)
    for (const auto& delta : a.alive_offsets())
      if (index.contains(c + delta)) return true;
  return false;
}

}  // namespace fracsq
