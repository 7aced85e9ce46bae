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

#ifndef FASTEC_CLI_METRICS_HPP_
#define FASTEC_CLI_METRICS_HPP_

#include <cstdint>
#include <string>

#include "fastec/driver.hpp"
#include "fastec/graph.hpp"
#include "fastec/params.hpp"

namespace fastec::cli {

struct MetricsRecord {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t delta = 0;
  double epsilon = 0.0;
  std::uint64_t q = 0;
  std::uint64_t seed = 0;
  std::uint64_t k_max = 0;
  std::uint64_t ell = 0;
  std::uint64_t iterations_total = 0;
  std::uint64_t fan_restarts = 0;
  std::uint64_t color_calls = 0;
  std::uint64_t color_draws = 0;
  std::uint64_t backward_steps = 0;
  std::uint64_t max_chain_edges = 0;
  double avg_chain_edges = 0.0;
  double wall_ms = 0.0;
  bool proper = false;
};

// `proper` must come from verify_proper on the final coloring.
MetricsRecord make_record(const Graph& g, const Params& params, const RunStats& stats,
                          bool proper);

// One JSON object, keys in declaration order. With include_timing false
// wall_ms is written as 0 so records can be diffed byte for byte.
std::string to_json(const MetricsRecord& r, bool include_timing = true);

MetricsRecord record_from_json(const std::string& text);

}  // namespace fastec::cli

#endif  // FASTEC_CLI_METRICS_HPP_
