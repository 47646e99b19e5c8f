// fracsq: classify fractal squares by their number of connected components.

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <string>

#include <fracsq/fracsq.hpp>

namespace {

using namespace fracsq;

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

struct InputArgs {
  std::string path;
  std::string builtin_name;

  void add_to(CLI::App* cmd) {
    auto* p = cmd->add_option("pattern", path, "Pattern file");
    auto* b = cmd->add_option("--builtin", builtin_name, "Named fixture: carpet, two_pillars, diag_pair, diag3d, example21_like, exact_m(m)");
    p->excludes(b);
    b->excludes(p);
  }

  std::string descriptor() const { return builtin_name.empty() ? path : "builtin:" + builtin_name; }

  DigitSet load() const {
    if (!builtin_name.empty()) return builtin(builtin_name);
    if (path.empty()) throw Error("cli", "no input: pass a pattern file or --builtin NAME");
    return read_pattern_file(path);
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cli", "cannot write '" + path + "'");
  out << content;
  if (!out.flush()) throw Error("cli", "write to '" + path + "' failed");
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-")
    std::cout << content;
  else
    write_file(out_path, content);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string describe(const Report& r) {
  std::string s = "input:      " + r.input + "\n";
  s += "base:       " + std::to_string(r.base) + "  dim: " + std::to_string(r.dim) + "  digits: " + std::to_string(r.digit_count) + "\n";
  s += "m, M, M':   " + std::to_string(r.m) + ", " + std::to_string(r.M) + ", " + (r.M_prime ? std::to_string(*r.M_prime) : "-") + "\n";
  s += "verdict:    " + to_string(r.verdict);
  if (r.component_count) s += " (" + std::to_string(*r.component_count) + " component" + (*r.component_count == 1 ? "" : "s") + ")";
  if (r.verdict == Verdict::InconclusiveHighDim) s += " (at least " + std::to_string(r.lower_bound) + " components)";
  s += "\n";
  if (r.diagnostics) {
    const auto& d = *r.diagnostics;
    s += "diagnostics: vertical_like=" + std::string(d.vertical_like ? "yes" : "no") +
         " horizontal_like=" + (d.horizontal_like ? "yes" : "no") + " min_pillar=" + std::to_string(d.min_pillar) +
         (d.full_pillar_case ? " full_pillars" : "") + (d.prop32_infinite ? " corner_component" : "");
    if (d.prop36) s += std::string(" outer_stacking=") + (d.prop36->first ? "yes" : "no") + "/" + (d.prop36->second ? "yes" : "no");
    s += "\n";
  }
  if (r.trace) {
    s += "Q_n components:";
    for (int c : *r.trace) s += " " + std::to_string(c);
    if (r.trace_truncated) s += " (truncated: cell budget)";
    s += "\n";
  }
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"Connected components of fractal squares F = (F + D)/N"};
  app.require_subcommand(1);
  const std::uint64_t cell_limit = cell_limit_from_env();

  // classify
  InputArgs classify_in;
  bool as_json = false, no_diag = false, timings = false;
  int trace_depth = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Decide connected / finitely many / uncountably many components");
  classify_in.add_to(classify_cmd);
  classify_cmd->add_flag("--json", as_json, "Print the JSON report");
  classify_cmd->add_option("--trace", trace_depth, "Also count components of Q_1..Q_n")->check(CLI::NonNegativeNumber);
  classify_cmd->add_flag("--no-diagnostics", no_diag, "Skip the shape diagnostics");
  classify_cmd->add_flag("--timings", timings, "Include timings in the report");

  // oracle
  InputArgs oracle_in;
  int oracle_depth = 4;
  auto* oracle_cmd = app.add_subcommand("oracle", "Component counts of Q_1..Q_n only (no graphs)");
  oracle_in.add_to(oracle_cmd);
  oracle_cmd->add_option("--depth,--trace", oracle_depth, "Deepest level n")->check(CLI::PositiveNumber);

  // render
  InputArgs render_in;
  int render_level = 1;
  std::string render_out;
  auto* render_cmd = app.add_subcommand("render", "Write Q_n as a plain PGM image");
  render_in.add_to(render_cmd);
  render_cmd->add_option("--level", render_level, "Level n")->check(CLI::PositiveNumber);
  render_cmd->add_option("--out", render_out, "Output path (default stdout)");

  // graph
  InputArgs graph_in;
  int graph_level = 1;
  std::string graph_out;
  auto* graph_cmd = app.add_subcommand("graph", "Write the level-1 or level-2 graph as DOT");
  graph_in.add_to(graph_cmd);
  graph_cmd->add_option("--level", graph_level, "1 or 2")->check(CLI::IsMember({1, 2}));
  graph_cmd->add_option("--out", graph_out, "Output path (default stdout)");

  // generate
  int components = 5;
  std::string generate_out;
  auto* generate_cmd = app.add_subcommand("generate", "Write the digit set with exactly m components (m >= 5)");
  generate_cmd->add_option("--components", components, "m")->required();
  generate_cmd->add_option("--out", generate_out, "Output pattern path (default stdout)");

  // builtin
  std::string builtin_name, builtin_out;
  auto* builtin_cmd = app.add_subcommand("builtin", "Print a named fixture as a pattern");
  builtin_cmd->add_option("name", builtin_name, "carpet, two_pillars, diag_pair, diag3d, example21_like, exact_m(m)")->required();
  builtin_cmd->add_option("--out", builtin_out, "Output path (default stdout)");

  // scan
  ScanOptions scan;
  std::string scan_out;
  std::uint64_t sample = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Classify every digit set of one base and check invariants (JSON lines)");
  scan_cmd->add_option("--base", scan.base, "Base N")->required()->check(CLI::Range(2, 64));
  scan_cmd->add_option("--dim", scan.dim, "Dimension")->check(CLI::IsMember({2, 3}));
  scan_cmd->add_option("--oracle-depth", scan.oracle_depth, "Deepest Q_n counted per set")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", scan_out, "Output .jsonl path (default stdout)");
  auto* sample_opt = scan_cmd->add_option("--sample", sample, "Number of random digit sets (required when N^dim > 9)");
  auto* seed_opt = scan_cmd->add_option("--seed", scan.seed, "Seed for --sample");
  sample_opt->needs(seed_opt);
  seed_opt->needs(sample_opt);
  scan_cmd->add_option("--threads", scan.threads, "Worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (*classify_cmd) {
    const auto t0 = std::chrono::steady_clock::now();
    const DigitSet d = classify_in.load();
    const Classification c = classify(d, {cell_limit, !no_diag});
    const double classify_ms = ms_since(t0);
    Report r = make_report(classify_in.descriptor(), d, c);
    if (trace_depth > 0) {
      const auto t1 = std::chrono::steady_clock::now();
      attach_trace(r, component_trace(d, trace_depth, cell_limit));
      if (timings) r.timings_ms = std::map<std::string, double>{{"classify", classify_ms}, {"trace", ms_since(t1)}};
    } else if (timings) {
      r.timings_ms = std::map<std::string, double>{{"classify", classify_ms}};
    }
    std::cout << (as_json ? to_json(r).dump(2) + "\n" : describe(r));
    return 0;
  }
  if (*oracle_cmd) {
    const DigitSet d = oracle_in.load();
    const Trace t = component_trace(d, oracle_depth, cell_limit);
    Json j;
    j["input"] = oracle_in.descriptor();
    j["N"] = d.base();
    j["dim"] = d.dim();
    j["digit_count"] = d.size();
    j["trace"] = t.counts;
    j["trace_truncated"] = t.truncated;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (*render_cmd) {
    emit(render_out, render_pgm(render_in.load(), render_level, cell_limit));
    return 0;
  }
  if (*graph_cmd) {
    const DigitSet d = graph_in.load();
    const Analysis a = analyze(d, {cell_limit, false}, graph_level == 2);
    if (graph_level == 2) {
      if (!a.level2) throw Error("graph", "the level-2 graph is only defined in dimension 2");
      emit(graph_out, to_dot(a.level2->graph, a.level2->components));
    } else {
      emit(graph_out, to_dot(a.level1.graph, a.level1.components));
    }
    return 0;
  }
  if (*generate_cmd) {
    emit(generate_out, serialize_pattern(generate_exact_m(components)));
    return 0;
  }
  if (*builtin_cmd) {
    emit(builtin_out, serialize_pattern(builtin(builtin_name)));
    return 0;
  }
  if (*scan_cmd) {
    if (*sample_opt) scan.sample = sample;
    scan.cell_limit = cell_limit;
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!scan_out.empty() && scan_out != "-") {
      file.open(scan_out, std::ios::binary);
      if (!file) throw Error("cli", "cannot write '" + scan_out + "'");
      out = &file;
    }
    std::signal(SIGINT, on_sigint);
    const ScanSummary s = run_scan(
        scan,
        [&](const ScanRecord& rec) {
          *out << to_json(rec, scan.dim).dump() << "\n";
          out->flush();
        },
        &g_interrupted);
    *out << to_json(s).dump() << "\n";
    out->flush();
    std::cerr << "scan: " << s.records << " records, " << s.violations << " invariant violations, " << s.errors << " errors"
              << (s.truncated ? " (truncated)" : "") << "\n";
    if (s.truncated) return 130;
    return s.violations == 0 && s.errors == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fracsq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
