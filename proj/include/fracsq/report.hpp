#pragma once

// JSON report of one classification. Keys are emitted in a fixed order so
// that identical runs produce identical bytes; timings are only included on
// request.

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "digit_set.hpp"
#include "error.hpp"
#include "grid_oracle.hpp"

namespace fracsq {

using Json = nlohmann::ordered_json;

struct Report {
  std::string input;
  Coord base = 2;
  int dim = 2;
  std::size_t digit_count = 0;
  int m = 0;
  int M = 0;
  std::optional<int> M_prime;
  Verdict verdict = Verdict::Connected;
  std::optional<int> component_count;
  int lower_bound = 1;
  std::optional<Diagnostics> diagnostics;
  std::optional<std::vector<int>> trace;
  bool trace_truncated = false;
  std::optional<std::map<std::string, double>> timings_ms;

  friend bool operator==(const Report&, const Report&) = default;
};

inline Report make_report(std::string input, const DigitSet& d, const Classification& c) {
  Report r;
  r.input = std::move(input);
  r.base = d.base();
  r.dim = d.dim();
  r.digit_count = d.size();
  r.m = c.m;
  r.M = c.M;
  r.M_prime = c.M2;
  r.verdict = c.verdict;
  r.component_count = c.count;
  r.lower_bound = c.lower_bound;
  r.diagnostics = c.diagnostics;
  return r;
}

inline void attach_trace(Report& r, const Trace& t) {
  r.trace = t.counts;
  r.trace_truncated = t.truncated;
}

namespace detail {

template <class T>
Json nullable(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> read_nullable(const Json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace detail

inline Json to_json(const Diagnostics& d) {
  Json j;
  j["vertical_like"] = d.vertical_like;
  j["horizontal_like"] = d.horizontal_like;
  j["prop32_infinite"] = d.prop32_infinite;
  j["min_pillar"] = d.min_pillar;
  j["full_pillar_case"] = d.full_pillar_case;
  j["prop36"] = d.prop36 ? Json::array({d.prop36->first, d.prop36->second}) : Json(nullptr);
  return j;
}

inline Diagnostics diagnostics_from_json(const Json& j) {
  Diagnostics d;
  d.vertical_like = j.at("vertical_like").get<bool>();
  d.horizontal_like = j.at("horizontal_like").get<bool>();
  d.prop32_infinite = j.at("prop32_infinite").get<bool>();
  d.min_pillar = j.at("min_pillar").get<Coord>();
  d.full_pillar_case = j.at("full_pillar_case").get<bool>();
  if (const auto& p = j.at("prop36"); !p.is_null()) d.prop36 = std::pair{p.at(0).get<bool>(), p.at(1).get<bool>()};
  return d;
}

inline Json to_json(const Report& r) {
  Json j;
  j["input"] = r.input;
  j["N"] = r.base;
  j["dim"] = r.dim;
  j["digit_count"] = r.digit_count;
  j["m"] = r.m;
  j["M"] = r.M;
  j["M_prime"] = detail::nullable(r.M_prime);
  j["verdict"] = to_string(r.verdict);
  j["component_count"] = detail::nullable(r.component_count);
  j["lower_bound"] = r.lower_bound;
  j["diagnostics"] = r.diagnostics ? to_json(*r.diagnostics) : Json(nullptr);
  j["trace"] = detail::nullable(r.trace);
  j["trace_truncated"] = r.trace_truncated;
  if (r.timings_ms) {
    Json t = Json::object();
    for (const auto& [k, v] : *r.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  return j;
}

inline Report report_from_json(const Json& j) {
  try {
    Report r;
    r.input = j.at("input").get<std::string>();
    r.base = j.at("N").get<Coord>();
    r.dim = j.at("dim").get<int>();
    r.digit_count = j.at("digit_count").get<std::size_t>();
    r.m = j.at("m").get<int>();
    r.M = j.at("M").get<int>();
    r.M_prime = detail::read_nullable<int>(j, "M_prime");
    const auto v = verdict_from_string(j.at("verdict").get<std::string>());
    if (!v) throw Error("report", "unknown verdict");
    r.verdict = *v;
    r.component_count = detail::read_nullable<int>(j, "component_count");
    r.lower_bound = j.at("lower_bound").get<int>();
    if (const auto& d = j.at("diagnostics"); !d.is_null()) r.diagnostics = diagnostics_from_json(d);
    r.trace = detail::read_nullable<std::vector<int>>(j, "trace");
    r.trace_truncated = j.at("trace_truncated").get<bool>();
    if (j.contains("timings_ms")) r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error("report", e.what());
  }
}

}  // namespace fracsq
