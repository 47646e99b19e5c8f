#pragma once

// Digit components, the level-1 graph over (digit, component) pairs, the
// refined digit set N·D + D with its components, and the level-2 graph.
//
// Every edge test reduces to offsets between cells of one level: the copy
// (F_i + d)/N is the union of level-2 cells N·d + D_i, so two copies meet
// iff some pair of those cells differs by an offset the automaton accepts.

#include <algorithm>
#include <cstdio>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cell_index.hpp"
#include "digit_set.hpp"
#include "disjoint_sets.hpp"
#include "error.hpp"
#include "limits.hpp"
#include "offset_automaton.hpp"
#include "partition.hpp"

namespace fracsq {

/// Components of a digit set under d ~ e iff (F + d) ∩ (F + e) ≠ ∅. The
/// automaton always describes the attractor F itself, so a refined digit set
/// (rescaled, or N·D + D) is passed together with the automaton of D.
inline Partition<Vec> digit_components(const DigitSet& d, const OffsetAutomaton& a) {
  if (d.dim() != a.dim()) throw Error("component_graphs", "automaton dimension mismatch");
  const auto digits = d.digits();
  const CellIndex index(digits, d.dim());
  DisjointSets sets(digits.size());
  for (std::uint32_t i = 0; i < digits.size(); ++i)
    for (const auto& delta : a.alive_offsets()) {
      const auto j = index.find(digits[i] + delta);
      if (j > static_cast<std::int64_t>(i)) sets.unite(i, static_cast<std::uint32_t>(j));
    }
  return make_partition(std::vector<Vec>(digits.begin(), digits.end()), sets);
}

/// For each u ∈ {-1,0,1}^dim: the pairs (a, b) of parts with
/// P_a ∩ (P_b + u) ≠ ∅, where P_a is the union of copies (F + c)/scale over
/// the cells c labelled a.
struct ContactTable {
  int dim = 2;
  std::vector<std::vector<std::pair<int, int>>> pairs;  // indexed by unit_offset code

  std::span<const std::pair<int, int>> at(const Vec& u) const { return pairs[static_cast<std::size_t>(unit_offset_code(u, dim))]; }
};

inline ContactTable contact_table(std::span<const Vec> cells, std::span<const int> labels, Coord scale, int dim,
                                  const OffsetAutomaton& a) {
  ContactTable t;
  t.dim = dim;
  const int n = neighborhood_size(dim);
  t.pairs.resize(static_cast<std::size_t>(n));
  const CellIndex index(cells, dim);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (const auto& delta : a.alive_offsets())
      for (int code = 0; code < n; ++code) {
        const Vec u = unit_offset(code, dim);
        const auto j = index.find(cells[i] + delta - scale * u);
        if (j == CellIndex::npos) continue;
        const int la = labels[i], lb = labels[static_cast<std::size_t>(j)];
        if (code == unit_offset_code(Vec{}, dim) && la == lb) continue;
        t.pairs[static_cast<std::size_t>(code)].emplace_back(la, lb);
      }
  for (auto& p : t.pairs) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  return t;
}

/// Vertex (digit, index) of a level graph; `index` is 0-based here and
/// printed 1-based.
struct Vertex {
  std::size_t digit = 0;
  int index = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Level-1 graph (vertices (d, i), parts D_i at scale N) or level-2 graph
/// (vertices ⟨d, j⟩, parts D*_j at scale N²).
struct LevelGraph {
  int level = 1;
  DigitSet digits;
  Coord scale = 2;
  std::vector<std::vector<Vec>> parts;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < w, sorted

  int part_count() const { return static_cast<int>(parts.size()); }
  std::size_t vertex_count() const { return digits.size() * parts.size(); }
  std::uint32_t id(const Vertex& v) const { return static_cast<std::uint32_t>(v.digit * parts.size() + static_cast<std::size_t>(v.index)); }
  Vertex vertex(std::uint32_t id) const { return {id / parts.size(), static_cast<int>(id % parts.size())}; }

  /// Cells at level `level + 1` whose copies of F make up the vertex's set.
  CellSet cellset(const Vertex& v) const {
    CellSet s{level + 1, digits.base(), digits.dim(), {}};
    const Vec& d = digits[v.digit];
    for (const auto& c : parts[static_cast<std::size_t>(v.index)]) s.cells.push_back(scale * d + c);
    return s;
  }
};

struct GraphResult {
  LevelGraph graph;
  Partition<Vertex> components;
};

namespace detail {

inline GraphResult build_level_graph(int level, const DigitSet& d, Coord scale, std::vector<std::vector<Vec>> parts,
                                     const OffsetAutomaton& a) {
  std::vector<Vec> cells;
  std::vector<int> labels;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (const auto& c : parts[p]) {
      cells.push_back(c);
      labels.push_back(static_cast<int>(p));
    }
  const ContactTable contact = contact_table(cells, labels, scale, d.dim(), a);

  LevelGraph g{level, d, scale, std::move(parts), {}};
  const int n = neighborhood_size(d.dim());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (int code = 0; code < n; ++code) {
      const Vec u = unit_offset(code, d.dim());
      const auto j = d.index_of(d[i] + u);
      if (j < 0) continue;
      for (const auto& [pa, pb] : contact.pairs[static_cast<std::size_t>(code)]) {
        auto s = g.id({i, pa}), t = g.id({static_cast<std::size_t>(j), pb});
        if (s == t) continue;
        g.edges.emplace_back(std::min(s, t), std::max(s, t));
      }
    }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

  DisjointSets sets(g.vertex_count());
  for (const auto& [s, t] : g.edges) sets.unite(s, t);
  std::vector<Vertex> vertices;
  vertices.reserve(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex(v));
  auto comps = make_partition(std::move(vertices), sets);
  return {std::move(g), std::move(comps)};
}

}  // namespace detail

/// G_F: vertex (d, i) stands for (F_i + d)/N with F_i = ∪_{e∈D_i} (F + e)/N.
inline GraphResult level1_graph(const DigitSet& d, const Partition<Vec>& parts, const OffsetAutomaton& a) {
  std::vector<std::vector<Vec>> groups(static_cast<std::size_t>(parts.count));
  for (std::size_t i = 0; i < parts.elements.size(); ++i) groups[static_cast<std::size_t>(parts.label[i])].push_back(parts.elements[i]);
  return detail::build_level_graph(1, d, d.base(), std::move(groups), a);
}

/// Components D*_1..D*_M of N·D + D over base N², obtained from the level-1
/// components as D*_j = ∪_{(d,i)∈C_j} (N·d + D_i).
struct DStarDecomposition {
  Coord base = 4;
  int dim = 2;
  std::vector<std::vector<Vec>> parts;

  std::size_t cell_count() const {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.size();
    return n;
  }
};

/// Builds D*_j from the level-1 components and checks the result against an
/// independent component computation on N·D + D. A mismatch is a bug and
/// raises std::logic_error.
inline DStarDecomposition dstar(const DigitSet& d, const GraphResult& level1, const OffsetAutomaton& a,
                                std::uint64_t cell_limit = kDefaultCellLimit) {
  const std::uint64_t need = static_cast<std::uint64_t>(d.size()) * d.size();
  if (need > cell_limit) throw ResourceError("component_graphs", need, cell_limit);
  const auto& g = level1.graph;
  DStarDecomposition star{d.base() * d.base(), d.dim(), std::vector<std::vector<Vec>>(static_cast<std::size_t>(level1.components.count))};
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const Vertex vx = g.vertex(v);
    auto& part = star.parts[static_cast<std::size_t>(level1.components.label[v])];
    for (const auto& c : g.parts[static_cast<std::size_t>(vx.index)]) part.push_back(d.base() * d[vx.digit] + c);
  }
  for (auto& p : star.parts) std::sort(p.begin(), p.end());

  std::vector<Vec> all;
  all.reserve(need);
  for (const auto& p : star.parts) all.insert(all.end(), p.begin(), p.end());
  const DigitSet refined(star.base, d.dim(), all);
  if (refined.size() != need) throw std::logic_error("component_graphs: N*D + D has colliding digits");

  const auto independent = digit_components(refined, a);
  std::vector<int> from_graph(refined.size());
  for (std::size_t j = 0; j < star.parts.size(); ++j)
    for (const auto& c : star.parts[j]) from_graph[static_cast<std::size_t>(refined.index_of(c))] = static_cast<int>(j);
  if (independent.count != static_cast<int>(star.parts.size()) || !same_partition(from_graph, independent.label))
    throw std::logic_error("component_graphs: components of N*D + D disagree with the level-1 graph");
  return star;
}

/// G'_F: vertex ⟨d, j⟩ stands for (F*_j + d)/N with F*_j = ∪_{c∈D*_j} (F + c)/N².
inline GraphResult level2_graph(const DigitSet& d, const DStarDecomposition& star, const OffsetAutomaton& a) {
  return detail::build_level_graph(2, d, star.base, star.parts, a);
}

/// DOT rendering; vertices named d<x>_<y>[_<z>]__i<index>, filled with one
/// color per component.
inline std::string to_dot(const LevelGraph& g, const Partition<Vertex>& comps) {
  auto name = [&](std::uint32_t id) {
    const Vertex v = g.vertex(id);
    std::string s = "d";
    for (int i = 0; i < g.digits.dim(); ++i) {
      if (i) s += '_';
      s += std::to_string(g.digits[v.digit][i]);
    }
    return s + "__i" + std::to_string(v.index + 1);
  };
  std::string out = "graph level" + std::to_string(g.level) + " {\n  node [style=filled];\n";
  char color[64];
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const int c = comps.label[v];
    std::snprintf(color, sizeof color, "%.4f 0.450 0.950", comps.count > 0 ? static_cast<double>(c) / comps.count : 0.0);
    out += "  " + name(v) + " [fillcolor=\"" + color + "\", component=" + std::to_string(c + 1) + "];\n";
  }
  for (const auto& [s, t] : g.edges) out += "  " + name(s) + " -- " + name(t) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace fracsq
