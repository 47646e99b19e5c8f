#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace fracsq;
using namespace testing_support;

namespace {

// Union-find free component count: repeated flood fill over an adjacency
// matrix built from an arbitrary edge predicate.
template <class Edge>
std::vector<int> flood_labels(std::size_t n, Edge edge) {
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (label[w] < 0 && edge(u, w)) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

int label_count(const std::vector<int>& labels) { return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1; }

std::set<std::pair<std::uint32_t, std::uint32_t>> brute_edges(const LevelGraph& g, const OffsetAutomaton& a) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  std::vector<CellSet> sets;
  for (std::uint32_t v = 0; v < n; ++v) sets.push_back(g.cellset(g.vertex(v)));
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t w = u + 1; w < n; ++w)
      if (cells_intersect(a, sets[u], sets[w])) out.insert({u, w});
  return out;
}

struct Pipeline {
  OffsetAutomaton a;
  Partition<Vec> parts;
  GraphResult level1;
};

Pipeline run(const DigitSet& d) {
  OffsetAutomaton a(d);
  auto parts = digit_components(d, a);
  auto level1 = level1_graph(d, parts, a);
  return {std::move(a), std::move(parts), std::move(level1)};
}

}  // namespace

TEST(DigitComponents, Examples) {
  EXPECT_EQ(run(builtin("carpet")).parts.count, 1);
  EXPECT_EQ(run(builtin("two_pillars")).parts.count, 2);
  EXPECT_EQ(run(DigitSet(4, 2, {{2, 1}})).parts.count, 1);
  EXPECT_EQ(run(builtin("diag_pair")).parts.count, 1);
  EXPECT_EQ(run(builtin("diag3d")).parts.count, 1);
}

TEST(DigitComponents, MatchesPairwiseFloodFill) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const auto d = random_set(rng, 2 + static_cast<Coord>(rng() % 6), 0.2 + 0.05 * static_cast<double>(t % 10));
    const auto p = run(d);
    const auto expected = flood_labels(d.size(), [&](std::size_t i, std::size_t j) { return p.a.nonempty(d[j] - d[i]); });
    EXPECT_TRUE(same_partition(expected, p.parts.label));
    EXPECT_EQ(label_count(expected), p.parts.count);
  }
}

TEST(Level1Graph, Examples) {
  const auto carpet = run(builtin("carpet"));
  EXPECT_EQ(carpet.level1.graph.vertex_count(), 8u);
  EXPECT_EQ(carpet.level1.components.count, 1);
  const auto pillars = run(builtin("two_pillars"));
  EXPECT_EQ(pillars.level1.graph.vertex_count(), 12u);
  EXPECT_EQ(pillars.level1.components.count, 4);
}

// Edges from the contact table against cells_intersect on every vertex pair.
TEST(Level1Graph, EdgesMatchBruteForceExhaustively) {
  for (Coord base : {2, 3})
    for (const auto& d : all_sets(base)) {
      const auto p = run(d);
      const auto& g = p.level1.graph;
      const std::set<std::pair<std::uint32_t, std::uint32_t>> got(g.edges.begin(), g.edges.end());
      EXPECT_EQ(got, brute_edges(g, p.a)) << serialize_pattern(d);
    }
}

TEST(Level2Graph, EdgesMatchBruteForce) {
  std::vector<DigitSet> sets = all_sets(3);
  std::mt19937_64 rng(22);
  for (int t = 0; t < 30; ++t) sets.push_back(hook_reflection_set(rng, 4 + static_cast<Coord>(rng() % 2), t % 2));
  for (const auto& d : sets) {
    const auto p = run(d);
    const auto star = dstar(d, p.level1, p.a);
    const auto level2 = level2_graph(d, star, p.a);
    const auto& g = level2.graph;
    const std::set<std::pair<std::uint32_t, std::uint32_t>> got(g.edges.begin(), g.edges.end());
    EXPECT_EQ(got, brute_edges(g, p.a)) << serialize_pattern(d);
  }
}

TEST(Level1Graph, ContactTableMatchesDirectCheck) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto d = random_set(rng, 2 + static_cast<Coord>(rng() % 4), 0.5);
    const auto p = run(d);
    std::vector<Vec> cells;
    std::vector<int> labels;
    for (std::size_t i = 0; i < p.parts.elements.size(); ++i) {
      cells.push_back(p.parts.elements[i]);
      labels.push_back(p.parts.label[i]);
    }
    const auto table = contact_table(cells, labels, d.base(), 2, p.a);
    for (int code = 0; code < 9; ++code) {
      const Vec u = unit_offset(code, 2);
      std::set<std::pair<int, int>> expected;
      for (int x = 0; x < p.parts.count; ++x)
        for (int y = 0; y < p.parts.count; ++y) {
          if (x == y && u == Vec{}) continue;
          CellSet sx{1, d.base(), 2, p.parts.members(x)};
          CellSet sy{1, d.base(), 2, p.parts.members(y)};
          for (auto& c : sy.cells) c = c + d.base() * u;
          if (cells_intersect(p.a, sx, sy)) expected.insert({x, y});
        }
      const auto span = table.at(u);
      const std::set<std::pair<int, int>> got(span.begin(), span.end());
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(LevelGraphs, CountChainAndRescaleIdentity) {
  std::vector<DigitSet> sets = all_sets(3);
  std::mt19937_64 rng(24);
  for (int t = 0; t < 200; ++t) sets.push_back(random_set(rng, 4 + static_cast<Coord>(rng() % 3), 0.45));
  for (int t = 0; t < 60; ++t) sets.push_back(hook_reflection_set(rng, 4 + static_cast<Coord>(rng() % 5), t % 2));
  for (int t = 0; t < 60; ++t) sets.push_back(interleaved_hooks_set(rng, 4 + static_cast<Coord>(rng() % 5)));
  for (const auto& d : sets) {
    const auto p = run(d);
    const int m = p.parts.count, M = p.level1.components.count;
    const auto star = dstar(d, p.level1, p.a);
    const int M2 = level2_graph(d, star, p.a).components.count;
    EXPECT_LE(m, M);
    EXPECT_LE(M, M2);
    EXPECT_EQ(digit_components(rescale(d, 2), p.a).count, M) << serialize_pattern(d);
  }
}

// When M = m the components of G_F are {(d, i) : d in D_k, all i}.
TEST(Level1Graph, EqualCountsGiveDigitComponentBlocks) {
  std::vector<DigitSet> sets = all_sets(3);
  std::mt19937_64 rng(25);
  for (int t = 0; t < 100; ++t) sets.push_back(hook_reflection_set(rng, 4 + static_cast<Coord>(rng() % 5), t % 2));
  for (int t = 0; t < 100; ++t) sets.push_back(interleaved_hooks_set(rng, 4 + static_cast<Coord>(rng() % 5)));
  sets.push_back(builtin("example21_like"));
  sets.push_back(builtin("exact_m(5)"));
  int checked = 0;
  for (const auto& d : sets) {
    const auto p = run(d);
    if (p.parts.count != p.level1.components.count) continue;
    ++checked;
    const auto& g = p.level1.graph;
    std::vector<int> expected(g.vertex_count());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) expected[v] = p.parts.label[g.vertex(v).digit];
    EXPECT_TRUE(same_partition(expected, p.level1.components.label)) << serialize_pattern(d);
  }
  EXPECT_GT(checked, 150);
}

// Each level-1 component's cells lie inside the cells of exactly one F_i.
TEST(Level1Graph, ComponentsSitInsideOneDigitComponent) {
  std::vector<DigitSet> sets = all_sets(3);
  std::mt19937_64 rng(26);
  for (int t = 0; t < 100; ++t) sets.push_back(random_set(rng, 4 + static_cast<Coord>(rng() % 3), 0.45));
  for (const auto& d : sets) {
    const auto p = run(d);
    const auto& g = p.level1.graph;
    std::vector<std::set<Vec>> fi(static_cast<std::size_t>(p.parts.count));
    for (std::size_t k = 0; k < p.parts.elements.size(); ++k)
      for (const auto& e : d.digits()) fi[static_cast<std::size_t>(p.parts.label[k])].insert(d.base() * p.parts.elements[k] + e);
    for (int j = 0; j < p.level1.components.count; ++j) {
      std::set<Vec> cells;
      for (const auto v : p.level1.components.member_indices(j))
        for (const auto& c : g.cellset(g.vertex(static_cast<std::uint32_t>(v))).cells) cells.insert(c);
      int hosts = 0;
      for (const auto& f : fi) hosts += std::includes(f.begin(), f.end(), cells.begin(), cells.end());
      EXPECT_EQ(hosts, 1) << serialize_pattern(d);
    }
  }
}

TEST(DStar, Examples) {
  const auto carpet = run(builtin("carpet"));
  const auto s1 = dstar(builtin("carpet"), carpet.level1, carpet.a);
  EXPECT_EQ(s1.base, 9);
  ASSERT_EQ(s1.parts.size(), 1u);
  EXPECT_EQ(s1.parts[0].size(), 64u);

  const auto d = builtin("two_pillars");
  const auto pillars = run(d);
  const auto s2 = dstar(d, pillars.level1, pillars.a);
  EXPECT_EQ(s2.parts.size(), 4u);
  EXPECT_EQ(s2.cell_count(), 36u);
  for (const auto& part : s2.parts) EXPECT_EQ(part.size(), 9u);
  EXPECT_EQ(level2_graph(d, s2, pillars.a).components.count, 8);
  EXPECT_EQ(level2_graph(builtin("carpet"), s1, carpet.a).components.count, 1);
}

TEST(DStar, CoversRescaledSet) {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 100; ++t) {
    const auto d = random_set(rng, 2 + static_cast<Coord>(rng() % 5), 0.5);
    const auto p = run(d);
    const auto star = dstar(d, p.level1, p.a);
    EXPECT_EQ(star.cell_count(), d.size() * d.size());
    std::vector<Vec> all;
    for (const auto& part : star.parts) all.insert(all.end(), part.begin(), part.end());
    EXPECT_EQ(DigitSet(star.base, 2, all), rescale(d, 2));
  }
}

TEST(DStar, EnforcesCellLimit) {
  const auto d = builtin("carpet");
  const auto p = run(d);
  EXPECT_THROW(dstar(d, p.level1, p.a, 10), ResourceError);
}

TEST(Dot, TwoPillarsLevelOne) {
  const auto p = run(builtin("two_pillars"));
  const auto dot = to_dot(p.level1.graph, p.level1.components);
  std::size_t nodes = 0;
  std::set<std::string> colors;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    const auto at = line.find("fillcolor=\"");
    if (at == std::string::npos) continue;
    ++nodes;
    colors.insert(line.substr(at, line.find('"', at + 11) - at));
  }
  EXPECT_EQ(nodes, 12u);
  EXPECT_EQ(colors.size(), 4u);
  EXPECT_EQ(dot.rfind("graph level1 {\n", 0), 0u);
  EXPECT_NE(dot.find("d0_0__i1"), std::string::npos);
  EXPECT_EQ(dot, to_dot(run(builtin("two_pillars")).level1.graph, p.level1.components));
}

TEST(Dot, IsolatedNodes) {
  const auto d = DigitSet(3, 2, {{0, 0}, {2, 2}});
  const auto p = run(d);
  EXPECT_TRUE(p.level1.graph.edges.empty());
  const auto dot = to_dot(p.level1.graph, p.level1.components);
  EXPECT_EQ(dot.find("--"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 2 + 4 + 1);
}
