#pragma once

// Decision procedure for the number of connected components of F:
//
//   m  = #components of D        m = 1        -> connected
//   M  = #components of G_F      M = m        -> exactly m components
//   M' = #components of G'_F     M' = M       -> exactly M components
//                                otherwise    -> uncountably many
//
// The level-2 step is only valid in the plane; in dimension 3 the procedure
// stops after the level-1 test and reports a lower bound.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "component_graphs.hpp"
#include "digit_set.hpp"
#include "limits.hpp"
#include "offset_automaton.hpp"
#include "partition.hpp"
#include "shape.hpp"

namespace fracsq {

enum class Verdict { Connected, Finite, Uncountable, InconclusiveHighDim };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Connected: return "connected";
    case Verdict::Finite: return "finite";
    case Verdict::Uncountable: return "uncountable";
    case Verdict::InconclusiveHighDim: return "inconclusive_high_dim";
  }
  return "?";
}

inline std::optional<Verdict> verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::Connected, Verdict::Finite, Verdict::Uncountable, Verdict::InconclusiveHighDim})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

/// Necessary conditions for finitely many components, evaluated on D alone.
struct Diagnostics {
  bool vertical_like = false;
  bool horizontal_like = false;
  bool prop32_infinite = false;  // disconnected and neither vertical- nor horizontal-like
  Coord min_pillar = 0;
  bool full_pillar_case = false;  // every pillar is a full column and m >= 2
  std::optional<std::pair<bool, bool>> prop36;  // self-stacking of leftmost/rightmost component

  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

struct Classification {
  Verdict verdict = Verdict::Connected;
  std::optional<int> count;  // 1 for connected, k for finite
  int m = 0;
  int M = 0;
  std::optional<int> M2;  // level-2 count, when computed
  int lower_bound = 1;    // proven lower bound on the number of components
  std::optional<Diagnostics> diagnostics;
};

struct ClassifyOptions {
  std::uint64_t cell_limit = kDefaultCellLimit;
  bool diagnostics = true;
};

/// (F_1 ∩ (F_1 + (0,1)) ≠ ∅, F_m ∩ (F_m + (0,1)) ≠ ∅) for the leftmost and
/// rightmost components. Requires dim 2, m >= 2 and every component
/// vertical-like.
inline std::pair<bool, bool> check_prop_intersect(const DigitSet& d, const Partition<Vec>& parts, const OffsetAutomaton& a) {
  require_planar(d, "check_prop_intersect");
  if (parts.count < 2) throw Error("classifier", "check_prop_intersect requires at least two components");
  const auto order = arrange_left_to_right(d, parts);
  auto stacks = [&](int id) {
    CellSet lower{1, d.base(), 2, parts.members(id)};
    CellSet upper = lower;
    for (auto& c : upper.cells) c[1] += d.base();
    return cells_intersect(a, lower, upper);
  };
  return {stacks(order.front()), stacks(order.back())};
}

inline Diagnostics diagnostics(const DigitSet& d, const Partition<Vec>& parts, const OffsetAutomaton& a) {
  require_planar(d, "diagnostics");
  Diagnostics out;
  const auto flags = shape_predicates(d, parts);
  out.vertical_like = flags.all_vertical_like;
  out.horizontal_like = flags.all_horizontal_like;
  out.prop32_infinite = parts.count >= 2 && !out.vertical_like && !out.horizontal_like;
  const auto ps = pillars(d);
  out.min_pillar = std::min_element(ps.begin(), ps.end(), [](const Pillar& x, const Pillar& y) { return x.size() < y.size(); })->size();
  out.full_pillar_case = out.min_pillar == d.base() && parts.count >= 2;
  if (parts.count >= 2 && out.vertical_like) out.prop36 = check_prop_intersect(d, parts, a);
  return out;
}

/// Every intermediate object of one classification run.
struct Analysis {
  OffsetAutomaton automaton;
  Partition<Vec> digit_parts;
  GraphResult level1;
  std::optional<DStarDecomposition> star;
  std::optional<GraphResult> level2;
  Classification result;
};

inline void check_budget(const char* module, std::uint64_t need, std::uint64_t limit) {
  if (need > limit) throw ResourceError(module, need, limit);
}

/// Runs the pipeline. With `force_level2`, D* and G'_F are built even when
/// the verdict is already decided at level 1 (2D only).
inline Analysis analyze(const DigitSet& d, const ClassifyOptions& opts = {}, bool force_level2 = false) {
  check_budget("classifier", d.size(), opts.cell_limit);
  OffsetAutomaton a(d);
  auto parts = digit_components(d, a);
  auto level1 = level1_graph(d, parts, a);
  Analysis out{std::move(a), std::move(parts), std::move(level1), std::nullopt, std::nullopt, {}};

  auto& r = out.result;
  r.m = out.digit_parts.count;
  r.M = out.level1.components.count;
  r.lower_bound = std::max(r.m, r.M);
  if (opts.diagnostics && d.dim() == 2) r.diagnostics = diagnostics(d, out.digit_parts, out.automaton);

  const bool decided_at_level1 = r.m == 1 || r.M == r.m;
  if (r.m == 1) {
    r.verdict = Verdict::Connected;
    r.count = 1;
  } else if (r.M == r.m) {
    r.verdict = Verdict::Finite;
    r.count = r.m;
  } else if (d.dim() != 2) {
    r.verdict = Verdict::InconclusiveHighDim;
  }

  if (d.dim() == 2 && (!decided_at_level1 || force_level2)) {
    check_budget("classifier", static_cast<std::uint64_t>(d.size()) * d.size(), opts.cell_limit);
    out.star = dstar(d, out.level1, out.automaton, opts.cell_limit);
    out.level2 = level2_graph(d, *out.star, out.automaton);
    r.M2 = out.level2->components.count;
    r.lower_bound = std::max(r.lower_bound, *r.M2);
    if (!decided_at_level1) {
      if (*r.M2 == r.M) {
        r.verdict = Verdict::Finite;
        r.count = r.M;
      } else {
        r.verdict = Verdict::Uncountable;
      }
    }
  }
  return out;
}

inline Classification classify(const DigitSet& d, const ClassifyOptions& opts = {}) { return analyze(d, opts).result; }

}  // namespace fracsq
