#pragma once

// Test-side oracles and generators. Nothing here reuses the library's index,
// automaton or disjoint-set code; results are computed the slow, obvious way.

#include <algorithm>
#include <array>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include <fracsq/fracsq.hpp>

namespace testing_support {

using fracsq::Coord;
using fracsq::DigitSet;
using fracsq::Vec;
using Point = std::array<Coord, 3>;

inline Point point(const Vec& v) { return {v[0], v[1], v[2]}; }

inline Coord ipow(Coord b, int e) {
  Coord r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Q_n by enumerating every digit word d_1..d_n with an odometer.
inline std::set<Point> naive_iterate(const DigitSet& d, int n) {
  std::set<Point> out;
  std::vector<std::size_t> word(static_cast<std::size_t>(n), 0);
  for (;;) {
    Point p{0, 0, 0};
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < 3; ++k) p[k] = p[k] * d.base() + d[word[i]][k];
    out.insert(p);
    int pos = n - 1;
    while (pos >= 0 && ++word[pos] == d.size()) word[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

inline std::vector<Point> box_offsets(int dim) {
  std::vector<Point> out;
  for (Coord x = -1; x <= 1; ++x)
    for (Coord y = -1; y <= 1; ++y)
      for (Coord z = -1; z <= 1; ++z)
        if (dim == 3 || z == 0) out.push_back({x, y, z});
  return out;
}

// Breadth-first search over a std::set under Chebyshev adjacency.
inline int bfs_components(const std::set<Point>& cells, int dim) {
  std::set<Point> seen;
  const auto offsets = box_offsets(dim);
  int count = 0;
  for (const auto& start : cells) {
    if (seen.count(start)) continue;
    ++count;
    std::queue<Point> q;
    q.push(start);
    seen.insert(start);
    while (!q.empty()) {
      const Point p = q.front();
      q.pop();
      for (const auto& o : offsets) {
        const Point r{p[0] + o[0], p[1] + o[1], p[2] + o[2]};
        if (cells.count(r) && seen.insert(r).second) q.push(r);
      }
    }
  }
  return count;
}

struct PointHash {
  std::size_t operator()(const Point& p) const {
    return std::hash<Coord>()(p[0] * 73856093 ^ p[1] * 19349663 ^ p[2] * 83492791);
  }
};

// Whether some cells a, b of Q_n satisfy |b + N^n v - a|_inf <= 1, i.e.
// Q_n meets Q_n + v as closed sets.
inline bool level_pair_exists(const std::set<Point>& q, Coord scale, const Vec& v, int dim) {
  std::unordered_set<Point, PointHash> lookup(q.begin(), q.end());
  const auto offsets = box_offsets(dim);
  for (const auto& b : q)
    for (const auto& o : offsets) {
      const Point a{b[0] + scale * v[0] + o[0], b[1] + scale * v[1] + o[1], b[2] + scale * v[2] + o[2]};
      if (lookup.count(a)) return true;
    }
  return false;
}

inline std::vector<DigitSet> all_sets(Coord base) {
  std::vector<DigitSet> out;
  const std::uint64_t cells = fracsq::grid_cell_count(base, 2);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells); ++mask)
    out.push_back(fracsq::digit_set_from_mask(base, 2, mask));
  return out;
}

inline DigitSet random_set(std::mt19937_64& rng, Coord base, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Vec> d;
  for (Coord x = 0; x < base; ++x)
    for (Coord y = 0; y < base; ++y)
      if (keep(rng)) d.emplace_back(x, y);
  if (d.empty()) d.emplace_back(static_cast<Coord>(rng() % static_cast<std::uint64_t>(base)), 0);
  return DigitSet(base, 2, std::move(d));
}

// A left column with occasional gaps, random cells in the left half, and the
// point reflection of all of it.
inline DigitSet hook_reflection_set(std::mt19937_64& rng, Coord base, bool gaps) {
  std::vector<Vec> left;
  for (Coord y = 0; y < base; ++y)
    if (!(gaps && y > 0 && y < base - 1 && rng() % 4 == 0)) left.emplace_back(0, y);
  const Coord extra = static_cast<Coord>(rng() % static_cast<std::uint64_t>(2 * base));
  for (Coord k = 0; k < extra; ++k) {
    const Coord x = 1 + static_cast<Coord>(rng() % static_cast<std::uint64_t>((base - 1) / 2));
    const Coord y = static_cast<Coord>(rng() % static_cast<std::uint64_t>(base));
    left.emplace_back(x, y);
  }
  std::vector<Vec> all = left;
  for (const auto& v : left) all.emplace_back(base - 1 - v[0], base - 1 - v[1]);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return DigitSet(base, 2, std::move(all));
}

// Full outer columns with a hook hanging off each: the left hook covers
// rows [a, N-1], the right one rows [0, b] with a >= b + 2, so the hooks may
// interleave horizontally without touching. Finite verdicts are common.
inline DigitSet interleaved_hooks_set(std::mt19937_64& rng, Coord base) {
  auto pick = [&](Coord lo, Coord hi) { return lo + static_cast<Coord>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<Vec> all;
  for (Coord y = 0; y < base; ++y) {
    all.emplace_back(0, y);
    all.emplace_back(base - 1, y);
  }
  const Coord w1 = pick(1, base - 2), w2 = pick(1, base - 2);
  const Coord b = pick(0, base - 3), a = pick(b + 2, base - 1);
  for (Coord x = 1; x <= w1; ++x)
    for (Coord y = a; y < base; ++y) all.emplace_back(x, y);
  for (Coord x = base - 1 - w2; x < base - 1; ++x)
    for (Coord y = 0; y <= b; ++y) all.emplace_back(x, y);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return DigitSet(base, 2, std::move(all));
}

inline std::vector<DigitSet> builtin_fixtures() {
  std::vector<DigitSet> out;
  for (const char* name : {"carpet", "two_pillars", "diag_pair", "diag3d", "example21_like", "exact_m(5)"})
    out.push_back(fracsq::builtin(name));
  return out;
}

}  // namespace testing_support
