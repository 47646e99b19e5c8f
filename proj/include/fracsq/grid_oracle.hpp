#pragma once

// Brute-force component counts of the iterates Q_n, used to cross-check the
// graph-based verdicts. Closed cubes meet iff their Chebyshev distance is at
// most 1, so Q_n is counted under 8-connectivity (26 in 3D).

#include <cstdint>
#include <vector>

#include "cell_index.hpp"
#include "digit_set.hpp"
#include "disjoint_sets.hpp"
#include "error.hpp"
#include "limits.hpp"

namespace fracsq {

using GridSet = CellSet;

/// Cells of Q_n: all N^{n-1}d_1 + ... + d_n.
inline GridSet iterate(const DigitSet& d, int n, std::uint64_t cell_limit = kDefaultCellLimit) {
  if (n < 1) throw Error("grid_oracle", "level must be >= 1");
  if (checked_pow(static_cast<std::uint64_t>(d.base()), n, kMaxBase) == 0)
    throw Error("grid_oracle", "N^" + std::to_string(n) + " overflows the coordinate range");
  const std::uint64_t need = checked_pow(d.size(), n, cell_limit);
  if (need == 0) throw ResourceError("grid_oracle", checked_pow(d.size(), n, ~std::uint64_t{0}), cell_limit);

  GridSet g{1, d.base(), d.dim(), std::vector<Vec>(d.digits().begin(), d.digits().end())};
  for (int level = 2; level <= n; ++level) {
    std::vector<Vec> next;
    next.reserve(g.cells.size() * d.size());
    for (const auto& c : g.cells)
      for (const auto& e : d.digits()) next.push_back(d.base() * c + e);
    g.cells = std::move(next);
    g.level = level;
  }
  return g;
}

inline int count_components(const GridSet& g) {
  if (g.cells.empty()) return 0;
  const CellIndex index(g.cells, g.dim);
  // Half of the neighbourhood suffices since adjacency is symmetric.
  const int n = neighborhood_size(g.dim);
  std::vector<Vec> forward;
  for (int code = n / 2 + 1; code < n; ++code) forward.push_back(unit_offset(code, g.dim));
  DisjointSets sets(g.cells.size());
  for (std::uint32_t i = 0; i < g.cells.size(); ++i)
    for (const auto& delta : forward)
      if (const auto j = index.find(g.cells[i] + delta); j != CellIndex::npos) sets.unite(i, static_cast<std::uint32_t>(j));
  return static_cast<int>(sets.set_count());
}

struct Trace {
  std::vector<int> counts;  // counts[n-1] = #components of Q_n
  bool truncated = false;   // budget ran out before n_max
};

inline Trace component_trace(const DigitSet& d, int n_max, std::uint64_t cell_limit = kDefaultCellLimit) {
  Trace t;
  for (int n = 1; n <= n_max; ++n) {
    if (checked_pow(d.size(), n, cell_limit) == 0 || checked_pow(static_cast<std::uint64_t>(d.base()), n, kMaxBase) == 0) {
      t.truncated = true;
      break;
    }
    t.counts.push_back(count_components(iterate(d, n, cell_limit)));
  }
  return t;
}

}  // namespace fracsq
