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

#include "fastec_cli/metrics.hpp"

#include <json.hpp>

namespace fastec::cli {

MetricsRecord make_record(const Graph& g, const Params& params, const RunStats& stats,
                          bool proper) {
  MetricsRecord r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.delta = g.max_degree();
  r.epsilon = params.epsilon.value();
  r.q = params.q;
  r.seed = params.seed;
  r.k_max = params.k_max;
  r.ell = params.ell;
  r.iterations_total = stats.iterations_total;
  r.fan_restarts = stats.fan_restarts;
  r.color_calls = stats.color_calls;
  r.color_draws = stats.color_draws;
  r.backward_steps = stats.backward_iterations;
  r.max_chain_edges = stats.max_chain_edges;
  r.avg_chain_edges = stats.avg_chain_edges();
  r.wall_ms = stats.wall_ms;
  r.proper = proper;
  return r;
}

std::string to_json(const MetricsRecord& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.delta;
  j["epsilon"] = r.epsilon;
  j["q"] = r.q;
  j["seed"] = r.seed;
  j["k_max"] = r.k_max;
  j["ell"] = r.ell;
  j["iterations_total"] = r.iterations_total;
  j["fan_restarts"] = r.fan_restarts;
  j["color_calls"] = r.color_calls;
  j["color_draws"] = r.color_draws;
  j["backward_steps"] = r.backward_steps;
  j["max_chain_edges"] = r.max_chain_edges;
  j["avg_chain_edges"] = r.avg_chain_edges;
  j["wall_ms"] = include_timing ? r.wall_ms : 0.0;
  j["proper"] = r.proper;
  return j.dump();
}

MetricsRecord record_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  MetricsRecord r;
  j.at("n").get_to(r.n);
  j.at("m").get_to(r.m);
  j.at("delta").get_to(r.delta);
  j.at("epsilon").get_to(r.epsilon);
  j.at("q").get_to(r.q);
  j.at("seed").get_to(r.seed);
  j.at("k_max").get_to(r.k_max);
  j.at("ell").get_to(r.ell);
  j.at("iterations_total").get_to(r.iterations_total);
  j.at("fan_restarts").get_to(r.fan_restarts);
  j.at("color_calls").get_to(r.color_calls);
  j.at("color_draws").get_to(r.color_draws);
  j.at("backward_steps").get_to(r.backward_steps);
  j.at("max_chain_edges").get_to(r.max_chain_edges);
  j.at("avg_chain_edges").get_to(r.avg_chain_edges);
  j.at("wall_ms").get_to(r.wall_ms);
  j.at("proper").get_to(r.proper);
  return r;
}

}  // namespace fastec::cli
