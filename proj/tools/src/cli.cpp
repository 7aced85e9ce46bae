// Copyright 2026 The fastec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fastec_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "fastec/coloring_io.hpp"
#include "fastec/coloring_state.hpp"
#include "fastec/driver.hpp"
#include "fastec/edge_list_io.hpp"
#include "fastec/errors.hpp"
#include "fastec/generate.hpp"
#include "fastec/params.hpp"
#include "fastec_cli/bench.hpp"
#include "fastec_cli/metrics.hpp"

namespace fastec::cli {

namespace {

// Writes to `path`, or to `fallback` when path is "-".
template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::kParse, "cannot write " + path);
  fn(file);
  file.flush();
  if (!file) throw Error(Errc::kParse, "write failed: " + path);
}

struct GenOptions {
  std::string kind;
  std::size_t n = 0;
  std::size_t degree = 0;
  std::size_t edges = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t leaves = 0;
  std::uint64_t seed = 1;
  std::string out = "-";
};

struct RunOptions {
  std::string epsilon = "1";
  std::optional<std::size_t> k_max;
  std::optional<std::size_t> ell;
  std::string mode = "practical";
  bool checked = false;
  bool no_timing = false;
};

struct ColorOptions {
  std::string input;
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string metrics;
  std::string dot;
  RunOptions run;
};

struct VerifyOptions {
  std::string graph;
  std::string coloring;
  std::optional<std::uint64_t> q;
  bool complete = false;
};

struct BenchOptions {
  std::string family = "near_regular:16";
  std::vector<std::size_t> sizes{1000, 10000, 100000};
  std::size_t seeds = 5;
  std::uint64_t seed_base = 1;
  unsigned jobs = 1;
  std::string out = "-";
  std::string csv;
  RunOptions run;
};

void add_run_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--epsilon,-e", o.epsilon, "slack: q = floor((1+eps) * max degree); e.g. 0.5 or 1/3")
      ->capture_default_str();
  cmd->add_option("--kmax", o.k_max, "fan length cap (>= 2)");
  cmd->add_option("--ell", o.ell, "path parameter; paths are cut at 2*ell edges (>= 3)");
  cmd->add_option("--mode", o.mode, "practical | theory")
      ->check(CLI::IsMember({"practical", "theory"}))
      ->capture_default_str();
  cmd->add_flag("--checked", o.checked, "enable internal consistency checks");
  cmd->add_flag("--no-timing", o.no_timing, "write wall_ms as 0 so metrics compare byte for byte");
}

ParamOverrides overrides_of(const RunOptions& o) { return {o.k_max, o.ell}; }

GraphFamily family_of(const GenOptions& o) {
  if (o.kind == "near_regular") return NearRegular{o.n, o.degree};
  if (o.kind == "erdos_renyi") return ErdosRenyiM{o.n, o.edges};
  if (o.kind == "bipartite") return CompleteBipartite{o.left, o.right};
  if (o.kind == "cycle") return Cycle{o.n};
  if (o.kind == "star") return Star{o.leaves};
  throw Error(Errc::kParse, "unknown graph kind '" + o.kind + "'");
}

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  RngStream rng(o.seed);
  const GraphFamily family = family_of(o);
  const Graph g = generate(family, rng);
  with_output(o.out, out, [&](std::ostream& s) { write_edge_list(s, g); });
  err << describe(family) << ": n=" << g.num_vertices() << " m=" << g.num_edges()
      << " max_degree=" << g.max_degree() << '\n';
  return kExitOk;
}

struct LargestChain {
  std::size_t size = 0;
  std::optional<MultiStepChain> chain;
  std::unordered_map<EdgeId, Color> colors;
};

int cmd_color(const ColorOptions& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_edge_list(o.input);
  const Params params = derive_params(g.max_degree(), Epsilon::parse(o.run.epsilon),
                                      overrides_of(o.run), parse_mode(o.run.mode), o.seed);

  LargestChain largest;
  RngStream rng(params.seed);
  SequentialColorer colorer(g, params, rng, o.run.checked);
  if (!o.dot.empty()) {
    colorer.set_observer([&](EdgeId, VertexId, const MsvaOutcome& outcome) {
      const std::size_t size = outcome.chain.edge_count();
      if (largest.chain && size <= largest.size) return;
      largest.size = size;
      largest.chain = outcome.chain;
      largest.colors.clear();
      for (EdgeId e : outcome.chain.edges()) largest.colors[e] = colorer.state().color_of(e);
    });
  }
  colorer.run();

  const ColoringState& state = colorer.state();
  const ProperReport report = verify_proper(state);
  const bool proper = report.proper && state.complete();
  with_output(o.out, out, [&](std::ostream& s) {
    write_coloring(s, g, state.edge_colors(), params.q);
  });
  if (!o.metrics.empty()) {
    const MetricsRecord rec = make_record(g, params, colorer.stats(), proper);
    with_output(o.metrics, out,
                [&](std::ostream& s) { s << to_json(rec, !o.run.no_timing) << '\n'; });
  }
  if (!o.dot.empty()) {
    with_output(o.dot, out, [&](std::ostream& s) {
      if (!largest.chain) {
        s << "graph chain {\n}\n";
        return;
      }
      write_dot(s, g, *largest.chain, [&](EdgeId e) {
        const auto it = largest.colors.find(e);
        return it == largest.colors.end() ? kBlank : it->second;
      });
    });
  }
  if (!proper) {
    err << "error: output coloring failed verification\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_edge_list(o.graph);
  const LoadedColoring loaded = load_coloring(o.coloring, g);
  const Color q = o.q ? static_cast<Color>(*o.q) : loaded.q;
  const ProperReport report = verify_proper(g, loaded.colors, q);
  bool ok = report.proper;
  for (const auto& [a, b] : report.conflicts) {
    const auto [u1, v1] = g.endpoints(a);
    const auto [u2, v2] = g.endpoints(b);
    err << "conflict: edges (" << u1 << ' ' << v1 << ") and (" << u2 << ' ' << v2
        << ") share color " << loaded.colors[a] << '\n';
  }
  for (EdgeId e : report.out_of_range) {
    const auto [u, v] = g.endpoints(e);
    err << "out of range: edge (" << u << ' ' << v << ") has color " << loaded.colors[e]
        << " > q=" << q << '\n';
  }
  if (o.complete && report.colored != g.num_edges()) {
    err << "incomplete: " << g.num_edges() - report.colored << " uncolored edges\n";
    ok = false;
  }
  out << (ok ? "proper" : "NOT proper") << ": " << report.colored << '/' << g.num_edges()
      << " edges colored, q=" << q << '\n';
  return ok ? kExitOk : kExitUser;
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  config.family = o.family;
  config.sizes = o.sizes;
  for (std::size_t i = 0; i < o.seeds; ++i) config.seeds.push_back(o.seed_base + i);
  config.epsilon = Epsilon::parse(o.run.epsilon);
  config.overrides = overrides_of(o.run);
  config.mode = parse_mode(o.run.mode);
  config.jobs = o.jobs;
  config.checked = o.run.checked;

  std::vector<MetricsRecord> records;
  with_output(o.out, out, [&](std::ostream& s) {
    records = run_bench(config, [&](const MetricsRecord& r) {
      s << to_json(r, !o.run.no_timing) << '\n';
    });
  });
  const auto rows = summarize(records);
  std::ostream& table = o.out == "-" ? err : out;
  write_summary_csv(table, rows);
  if (!o.csv.empty()) {
    with_output(o.csv, out, [&](std::ostream& s) { write_summary_csv(s, rows); });
  }
  for (const auto& r : records) {
    if (!r.proper) {
      err << "error: improper coloring at n=" << r.n << " seed=" << r.seed << '\n';
      return kExitInternal;
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fastec: randomized (1+eps)*Delta edge coloring"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a graph as an edge list");
  gen_cmd->add_option("kind", gen.kind, "near_regular | erdos_renyi | bipartite | cycle | star")
      ->required();
  gen_cmd->add_option("--n", gen.n, "vertices (near_regular, erdos_renyi, cycle)");
  gen_cmd->add_option("--degree", gen.degree, "target degree (near_regular)");
  gen_cmd->add_option("--edges", gen.edges, "edge count (erdos_renyi)");
  gen_cmd->add_option("--left", gen.left, "left side (bipartite)");
  gen_cmd->add_option("--right", gen.right, "right side (bipartite)");
  gen_cmd->add_option("--leaves", gen.leaves, "leaves (star)");
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--out,-o", gen.out, "output path, - for stdout")->capture_default_str();

  ColorOptions color;
  CLI::App* color_cmd = app.add_subcommand("color", "edge-color a graph");
  color_cmd->add_option("input", color.input, "edge-list file")->required();
  color_cmd->add_option("--seed", color.seed)->capture_default_str();
  color_cmd->add_option("--out,-o", color.out, "coloring output, - for stdout")
      ->capture_default_str();
  color_cmd->add_option("--metrics-json", color.metrics, "write one JSON metrics record");
  color_cmd->add_option("--trace-dot", color.dot, "write the largest chain as Graphviz DOT");
  add_run_options(color_cmd, color.run);

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a coloring against its graph");
  verify_cmd->add_option("graph", verify.graph)->required();
  verify_cmd->add_option("coloring", verify.coloring)->required();
  verify_cmd->add_option("--q", verify.q, "palette size (default: the file's header)");
  verify_cmd->add_flag("--complete", verify.complete, "also require every edge colored");

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "color a graph family over sizes and seeds");
  bench_cmd->add_option("--family", bench.family,
                        "near_regular:<d> | erdos_renyi:<avg d> | bipartite | cycle | star")
      ->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "vertex counts")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--seeds", bench.seeds, "runs per size")->capture_default_str();
  bench_cmd->add_option("--seed-base", bench.seed_base, "first seed")->capture_default_str();
  bench_cmd->add_option("--jobs,-j", bench.jobs, "worker threads")->capture_default_str();
  bench_cmd->add_option("--out,-o", bench.out, "JSON lines output, - for stdout")
      ->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv, "summary CSV path");
  add_run_options(bench_cmd, bench.run);

  std::vector<const char*> argv{"fastec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUser;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*color_cmd) return cmd_color(color, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_internal() ? kExitInternal : kExitUser;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUser;
}

}  // namespace fastec::cli
