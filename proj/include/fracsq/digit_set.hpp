#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "limits.hpp"
#include "vec.hpp"

namespace fracsq {

// Coordinates of rescaled digit sets and of level-k cells must stay well
// inside int64 after the arithmetic done on them (products with N, keys).
inline constexpr Coord kMaxBase = Coord{1} << 30;

/// A digit set D ⊆ {0..N-1}^dim defining the attractor F = (F + D) / N.
/// Digits are kept sorted (lexicographic on coordinates) and duplicate-free;
/// this order is the canonical element order used by all decompositions.
class DigitSet {
 public:
  DigitSet(Coord base, int dim, std::vector<Vec> digits) : base_(base), dim_(dim), digits_(std::move(digits)) {
    if (base_ < 2 || base_ > kMaxBase) throw Error("core_model", "base must lie in [2, 2^30], got " + std::to_string(base_));
    if (dim_ < 2 || dim_ > kMaxDim) throw Error("core_model", "dimension must be 2 or 3, got " + std::to_string(dim_));
    if (digits_.empty()) throw Error("core_model", "empty digit set");
    std::sort(digits_.begin(), digits_.end());
    if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end())
      throw Error("core_model", "duplicate digit");
    for (const auto& d : digits_) {
      for (int i = 0; i < kMaxDim; ++i) {
        const bool ok = i < dim_ ? (d[i] >= 0 && d[i] < base_) : d[i] == 0;
        if (!ok) throw Error("core_model", "digit " + to_string(d, kMaxDim) + " out of range for base " + std::to_string(base_));
      }
    }
  }

  Coord base() const noexcept { return base_; }
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return digits_.size(); }
  std::span<const Vec> digits() const noexcept { return digits_; }
  const Vec& operator[](std::size_t i) const { return digits_[i]; }

  bool contains(const Vec& v) const { return std::binary_search(digits_.begin(), digits_.end(), v); }

  /// Position of `v` in canonical order, or -1.
  std::ptrdiff_t index_of(const Vec& v) const {
    auto it = std::lower_bound(digits_.begin(), digits_.end(), v);
    return it != digits_.end() && *it == v ? it - digits_.begin() : -1;
  }

  friend bool operator==(const DigitSet&, const DigitSet&) = default;

 private:
  Coord base_;
  int dim_;
  std::vector<Vec> digits_;
};

/// The digit set N^{k-1}D + ... + ND + D over base N^k. It generates the
/// same attractor; its level-1 cells are the level-k cells of D.
inline DigitSet rescale(const DigitSet& d, int k, std::uint64_t cell_limit = kDefaultCellLimit) {
  if (k < 1) throw Error("core_model", "rescale factor must be >= 1");
  if (k == 1) return d;
  const std::uint64_t new_base = checked_pow(static_cast<std::uint64_t>(d.base()), k, kMaxBase);
  if (new_base == 0) throw Error("core_model", "rescaled base N^" + std::to_string(k) + " overflows the coordinate range");
  const std::uint64_t count = checked_pow(d.size(), k, cell_limit);
  if (count == 0) throw ResourceError("core_model", checked_pow(d.size(), k, ~std::uint64_t{0}), cell_limit);

  std::vector<Vec> acc(d.digits().begin(), d.digits().end());
  for (int level = 1; level < k; ++level) {
    std::vector<Vec> next;
    next.reserve(acc.size() * d.size());
    for (const auto& hi : acc)
      for (const auto& lo : d.digits()) next.push_back(d.base() * hi + lo);
    acc = std::move(next);
  }
  return DigitSet(static_cast<Coord>(new_base), d.dim(), std::move(acc));
}

}  // namespace fracsq
