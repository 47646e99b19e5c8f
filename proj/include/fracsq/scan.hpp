#pragma once

// Exhaustive (or seeded random) sweep over digit sets of one base, checking
// the classifier against the grid oracle and the structural invariants.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "classifier.hpp"
#include "grid_oracle.hpp"
#include "report.hpp"

namespace fracsq {

struct ScanOptions {
  Coord base = 2;
  int dim = 2;
  int oracle_depth = 6;
  std::optional<std::uint64_t> sample;  // required when base^dim > 9
  std::uint64_t seed = 0;
  std::uint64_t cell_limit = kDefaultCellLimit;
  unsigned threads = 1;
};

struct ScanRecord {
  std::uint64_t index = 0;
  std::vector<Vec> digits;
  std::optional<Report> report;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  std::optional<std::string> error;
};

struct ScanSummary {
  std::uint64_t records = 0;
  std::map<std::string, std::uint64_t> verdicts;
  std::uint64_t errors = 0;
  std::uint64_t violations = 0;
  bool truncated = false;
};

inline constexpr Coord kMaxExhaustiveCells = 9;

inline std::uint64_t grid_cell_count(Coord base, int dim) {
  std::uint64_t n = 1;
  for (int i = 0; i < dim; ++i) n *= static_cast<std::uint64_t>(base);
  return n;
}

/// Cell with position `bit`, x fastest.
inline Vec grid_cell(Coord base, int dim, std::uint64_t bit) {
  Vec v;
  for (int i = 0; i < dim; ++i) {
    v[i] = static_cast<Coord>(bit % static_cast<std::uint64_t>(base));
    bit /= static_cast<std::uint64_t>(base);
  }
  return v;
}

inline DigitSet digit_set_from_mask(Coord base, int dim, std::uint64_t mask) {
  std::vector<Vec> d;
  const auto cells = grid_cell_count(base, dim);
  for (std::uint64_t b = 0; b < cells; ++b)
    if (mask >> b & 1U) d.push_back(grid_cell(base, dim, b));
  return DigitSet(base, dim, std::move(d));
}

/// Violated invariants of one analysed digit set; soft findings go to `notes`.
inline std::vector<std::string> check_invariants(const Classification& c, const Trace& trace, std::vector<std::string>& notes) {
  std::vector<std::string> v;
  if (!(c.m <= c.M && (!c.M2 || c.M <= *c.M2))) v.push_back("count_chain: m <= M <= M' fails");
  if ((c.verdict == Verdict::Connected) != (c.m == 1)) v.push_back("connected_iff_single_component");
  for (std::size_t i = 1; i < trace.counts.size(); ++i)
    if (trace.counts[i] < trace.counts[i - 1]) v.push_back("trace_monotone: Q_n component count decreased");
  if (c.count) {
    const int k = *c.count;
    for (int n : trace.counts)
      if (n > k) {
        v.push_back("trace_bound: Q_n has more than " + std::to_string(k) + " components");
        break;
      }
    if (!trace.counts.empty() && trace.counts.back() < k) notes.push_back("trace_below_count");
    if (c.verdict == Verdict::Finite && c.M2 && *c.M2 != k) v.push_back("level2_stable: finite verdict but M' != k");
  }
  if (const auto& d = c.diagnostics) {
    if (d->prop32_infinite && c.verdict != Verdict::Uncountable) v.push_back("not_vertical_or_horizontal: expected uncountable");
    if (d->full_pillar_case && c.verdict != Verdict::Uncountable) v.push_back("full_pillars: expected uncountable");
    if (c.verdict == Verdict::Finite && c.m >= 2 && d->vertical_like && d->prop36 != std::pair{true, true})
      v.push_back("edge_stacking: outer components do not meet their vertical translates");
  }
  return v;
}

inline ScanRecord scan_one(std::uint64_t index, std::string input, const DigitSet& d, const ScanOptions& opts) {
  ScanRecord rec;
  rec.index = index;
  rec.digits.assign(d.digits().begin(), d.digits().end());
  try {
    const Analysis a = analyze(d, {opts.cell_limit, true}, d.dim() == 2);
    const Trace trace = component_trace(d, opts.oracle_depth, opts.cell_limit);
    Report r = make_report(std::move(input), d, a.result);
    attach_trace(r, trace);
    rec.violations = check_invariants(a.result, trace, rec.notes);
    rec.report = std::move(r);
  } catch (const std::logic_error& e) {
    rec.violations.push_back(std::string("refined_partition: ") + e.what());
    rec.error = e.what();
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

inline Json to_json(const ScanRecord& r, int dim) {
  Json j;
  j["index"] = r.index;
  Json digits = Json::array();
  for (const auto& v : r.digits) {
    Json p = Json::array();
    for (int i = 0; i < dim; ++i) p.push_back(v[i]);
    digits.push_back(p);
  }
  j["digits"] = digits;
  j["report"] = r.report ? to_json(*r.report) : Json(nullptr);
  j["violations"] = r.violations;
  j["notes"] = r.notes;
  j["error"] = r.error ? Json(*r.error) : Json(nullptr);
  return j;
}

inline Json to_json(const ScanSummary& s) {
  Json inner;
  inner["records"] = s.records;
  Json verdicts = Json::object();
  for (auto v : {Verdict::Connected, Verdict::Finite, Verdict::Uncountable, Verdict::InconclusiveHighDim}) {
    auto it = s.verdicts.find(to_string(v));
    verdicts[to_string(v)] = it == s.verdicts.end() ? 0 : it->second;
  }
  inner["verdicts"] = verdicts;
  inner["errors"] = s.errors;
  inner["violations"] = s.violations;
  inner["truncated"] = s.truncated;
  Json j;
  j["summary"] = inner;
  return j;
}

/// Runs the sweep and hands records to `sink` in enumeration order, whatever
/// order the workers finish in. Setting `stop` ends the sweep after the
/// records already completed in order; the summary is then marked truncated.
inline ScanSummary run_scan(const ScanOptions& opts, const std::function<void(const ScanRecord&)>& sink,
                            const std::atomic<bool>* stop = nullptr) {
  if (opts.dim < 2 || opts.dim > kMaxDim) throw Error("scan", "dimension must be 2 or 3");
  if (opts.base < 2) throw Error("scan", "base must be >= 2");
  if (opts.oracle_depth < 1) throw Error("scan", "oracle depth must be >= 1");
  const std::uint64_t cells = grid_cell_count(opts.base, opts.dim);
  const bool exhaustive = cells <= kMaxExhaustiveCells;
  if (!exhaustive && !opts.sample)
    throw Error("scan", "base^dim = " + std::to_string(cells) + " exceeds 9; exhaustive scan unavailable, pass --sample and --seed");
  if (!exhaustive && cells > 64 * 64 * 64) throw Error("scan", "grid too large for sampling");

  const std::uint64_t total = opts.sample ? *opts.sample : (std::uint64_t{1} << cells) - 1;

  // Sampled sets are drawn up front so the sequence depends only on the seed.
  std::vector<std::vector<Vec>> sampled;
  if (opts.sample) {
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t i = 0; i < total; ++i) {
      std::vector<Vec> d;
      while (d.empty())
        for (std::uint64_t b = 0; b < cells; ++b)
          if (rng() >> 63) d.push_back(grid_cell(opts.base, opts.dim, b));
      sampled.push_back(std::move(d));
    }
  }

  auto make_job = [&](std::uint64_t i) {
    if (opts.sample) {
      DigitSet d(opts.base, opts.dim, sampled[i]);
      return scan_one(i, "scan:N=" + std::to_string(opts.base) + ":seed=" + std::to_string(opts.seed) + ":sample=" + std::to_string(i), d, opts);
    }
    const std::uint64_t mask = i + 1;
    return scan_one(i, "scan:N=" + std::to_string(opts.base) + ":mask=" + std::to_string(mask), digit_set_from_mask(opts.base, opts.dim, mask), opts);
  };

  std::vector<std::optional<ScanRecord>> slots(total);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::uint64_t> next{0};
  auto stopped = [&] { return stop != nullptr && stop->load(); };

  auto worker = [&] {
    for (;;) {
      if (stopped()) break;
      const std::uint64_t i = next.fetch_add(1);
      if (i >= total) break;
      ScanRecord rec = make_job(i);
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(rec);
      }
      ready.notify_all();
    }
    ready.notify_all();
  };

  const unsigned n_threads = std::max(1u, opts.threads);
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);

  ScanSummary summary;
  for (std::uint64_t i = 0; i < total; ++i) {
    ScanRecord rec;
    {
      std::unique_lock lock(mu);
      while (!ready.wait_for(lock, std::chrono::milliseconds(100), [&] { return slots[i].has_value() || stopped(); })) {
      }
      if (!slots[i]) {
        // Stop requested: wait for in-flight workers, then take what is ready.
        lock.unlock();
        pool.clear();
        lock.lock();
        if (!slots[i]) {
          summary.truncated = true;
          break;
        }
      }
      rec = std::move(*slots[i]);
      slots[i].reset();
    }
    ++summary.records;
    if (rec.report) ++summary.verdicts[to_string(rec.report->verdict)];
    if (rec.error) ++summary.errors;
    summary.violations += rec.violations.size();
    sink(rec);
  }
  if (stopped() && summary.records < total) summary.truncated = true;
  return summary;
}

}  // namespace fracsq
