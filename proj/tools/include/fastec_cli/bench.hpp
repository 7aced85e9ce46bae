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

#ifndef FASTEC_CLI_BENCH_HPP_
#define FASTEC_CLI_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fastec/generate.hpp"
#include "fastec/params.hpp"
#include "fastec_cli/metrics.hpp"

namespace fastec::cli {

// Family spec at size n: "near_regular:<d>", "erdos_renyi:<avg degree>",
// "bipartite" (two sides of n/2), "cycle", "star".
GraphFamily parse_family(std::string_view spec, std::size_t n);

struct BenchConfig {
  std::string family = "near_regular:16";
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  Epsilon epsilon;
  ParamOverrides overrides;
  Mode mode = Mode::kPractical;
  unsigned jobs = 1;
  bool checked = false;
};

// Graph seed for (seed, n); the coloring run uses `seed` itself.
std::uint64_t graph_seed(std::uint64_t seed, std::size_t n);

// Generates, colors and verifies one instance.
MetricsRecord run_instance(const GraphFamily& family, std::uint64_t seed, Epsilon epsilon,
                           const ParamOverrides& overrides, Mode mode, bool checked);

// One record per (size, seed), ordered by size then seed regardless of
// `jobs`. `on_record` runs on the calling thread, in that order, after all runs finish.
std::vector<MetricsRecord> run_bench(const BenchConfig& config,
                                     const std::function<void(const MetricsRecord&)>& on_record = {});

struct SummaryRow {
  std::uint64_t n = 0;
  std::size_t runs = 0;
  bool all_proper = true;
  double median_m = 0;
  double wall_ms_per_m = 0;
  double iterations_per_m = 0;
  double max_chain_edges = 0;
  double avg_chain_edges = 0;
};

// Medians over seeds, one row per n.
std::vector<SummaryRow> summarize(const std::vector<MetricsRecord>& records);

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

double median(std::vector<double> values);

}  // namespace fastec::cli

#endif  // FASTEC_CLI_BENCH_HPP_
