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

#include "fastec_cli/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <thread>
#include <type_traits>
#include <variant>

#include "fastec/coloring_state.hpp"
#include "fastec/driver.hpp"
#include "fastec/errors.hpp"

namespace fastec::cli {

namespace {

std::size_t parse_size(std::string_view s, std::string_view spec) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::kParse, "bad family spec '" + std::string(spec) + "'");
  }
  return v;
}

}  // namespace

GraphFamily parse_family(std::string_view spec, std::size_t n) {
  const auto colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? "" : spec.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw Error(Errc::kParse, std::string(kind) + " needs ':<degree>'");
    return parse_size(arg, spec);
  };
  if (kind == "near_regular") return NearRegular{n, need_arg()};
  if (kind == "erdos_renyi") return ErdosRenyiM{n, n * need_arg() / 2};
  if (kind == "bipartite") return CompleteBipartite{n / 2, n - n / 2};
  if (kind == "cycle") return Cycle{n};
  if (kind == "star") return Star{n == 0 ? 0 : n - 1};
  throw Error(Errc::kParse, "unknown family '" + std::string(kind) + "'");
}

std::uint64_t graph_seed(std::uint64_t seed, std::size_t n) { return derive_seed(seed, n); }

MetricsRecord run_instance(const GraphFamily& family, std::uint64_t seed, Epsilon epsilon,
                           const ParamOverrides& overrides, Mode mode, bool checked) {
  std::size_t n = std::visit(
      [](const auto& f) -> std::size_t {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, CompleteBipartite>) return f.left + f.right;
        else if constexpr (std::is_same_v<F, Star>) return f.leaves + 1;
        else return f.n;
      },
      family);
  RngStream graph_rng(graph_seed(seed, n));
  const Graph g = generate(family, graph_rng);
  const Params params = derive_params(g.max_degree(), epsilon, overrides, mode, seed);
  const ColorResult result = edge_color(g, params, checked);
  const ProperReport report = verify_proper(result.state);
  const bool proper = report.proper && result.state.complete();
  return make_record(g, params, result.stats, proper);
}

std::vector<MetricsRecord> run_bench(const BenchConfig& config,
                                     const std::function<void(const MetricsRecord&)>& on_record) {
  struct Task {
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t n : config.sizes) {
    for (std::uint64_t s : config.seeds) tasks.push_back({n, s});
  }
  // Validate the spec once before fanning out.
  for (std::size_t n : config.sizes) (void)parse_family(config.family, n);

  std::vector<std::optional<MetricsRecord>> done(tasks.size());
  std::vector<std::exception_ptr> failures(tasks.size());
  std::atomic<std::size_t> next{0};

  // Each task writes only its own slot, so workers share nothing mutable
  // beyond the counter.
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        done[i] = run_instance(parse_family(config.family, tasks[i].n), tasks[i].seed,
                               config.epsilon, config.overrides, config.mode, config.checked);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(1, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<MetricsRecord> records;
  records.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    records.push_back(*done[i]);
    if (on_record) on_record(records.back());
  }
  return records;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

std::vector<SummaryRow> summarize(const std::vector<MetricsRecord>& records) {
  std::map<std::uint64_t, std::vector<const MetricsRecord*>> by_n;
  for (const auto& r : records) by_n[r.n].push_back(&r);
  std::vector<SummaryRow> rows;
  for (const auto& [n, group] : by_n) {
    SummaryRow row;
    row.n = n;
    row.runs = group.size();
    std::vector<double> m, wall, iters, maxc, avgc;
    for (const MetricsRecord* r : group) {
      row.all_proper = row.all_proper && r->proper;
      const double edges = r->m == 0 ? 1.0 : static_cast<double>(r->m);
      m.push_back(static_cast<double>(r->m));
      wall.push_back(r->wall_ms / edges);
      iters.push_back(static_cast<double>(r->iterations_total) / edges);
      maxc.push_back(static_cast<double>(r->max_chain_edges));
      avgc.push_back(r->avg_chain_edges);
    }
    row.median_m = median(m);
    row.wall_ms_per_m = median(wall);
    row.iterations_per_m = median(iters);
    row.max_chain_edges = median(maxc);
    row.avg_chain_edges = median(avgc);
    rows.push_back(row);
  }
  return rows;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "n,runs,all_proper,median_m,wall_ms_per_m,iterations_per_m,max_chain_edges,"
         "avg_chain_edges\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.runs << ',' << (r.all_proper ? "true" : "false") << ',' << r.median_m
        << ',' << r.wall_ms_per_m << ',' << r.iterations_per_m << ',' << r.max_chain_edges << ','
        << r.avg_chain_edges << '\n';
  }
}

}  // namespace fastec::cli
