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

#include "fastec/driver.hpp"

#include <chrono>
#include <span>
#include <string>

#include "fastec/errors.hpp"

namespace fastec {

void UncoloredSet::init(std::size_t m) {
  items_.resize(m);
  pos_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    items_[i] = static_cast<EdgeId>(i);
    pos_[i] = static_cast<EdgeId>(i);
  }
}

EdgeId UncoloredSet::sample(RandomSource& rng) const {
  if (items_.empty()) throw Error(Errc::kPreconditionViolated, "sample from an empty set");
  return items_[rng.uniform_below(items_.size())];
}

void UncoloredSet::shuffle(RandomSource& rng) {
  fastec::shuffle(std::span<EdgeId>(items_), rng);
  for (std::size_t i = 0; i < items_.size(); ++i) pos_[items_[i]] = static_cast<EdgeId>(i);
}

void UncoloredSet::remove(EdgeId e) {
  if (!contains(e)) {
    throw Error(Errc::kPreconditionViolated, "edge " + std::to_string(e) + " is not uncolored");
  }
  const EdgeId at = pos_[e];
  const EdgeId last = items_.back();
  items_[at] = last;
  pos_[last] = at;
  items_.pop_back();
  pos_[e] = kNoEdge;
}

namespace {

constexpr std::size_t kPrefetchFar = 8;
constexpr std::size_t kPrefetchNear = 2;

EngineConfig engine_config(const Params& p, bool checked) {
  EngineConfig c;
  c.k_max = p.k_max;
  c.ell = p.ell;
  c.checked = checked;
  return c;
}

}  // namespace

SequentialColorer::SequentialColorer(const Graph& g, const Params& params, RandomSource& rng,
                                     bool checked)
    : graph_(&g),
      params_(params),
      rng_(&rng),
      checked_(checked),
      state_(g, params.q),
      engine_(state_, rng, engine_config(params, checked)),
      uncolored_(g.num_edges()) {
  if (g.max_degree() <= 1) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const EdgeId single[] = {e};
      state_.augment(single, 1);
      uncolored_.remove(e);
      ++edges_colored_;
    }
  }
  uncolored_.shuffle(rng);
}

EdgeId SequentialColorer::color_next() {
  if (uncolored_.empty()) throw Error(Errc::kPreconditionViolated, "no uncolored edge left");
  // The picks are fixed by the shuffle, so fetch the next few edges' data
  // while this one is processed.
  const std::size_t left = uncolored_.size();
  if (left > kPrefetchFar) __builtin_prefetch(&graph_->endpoints(uncolored_.from_back(kPrefetchFar)));
  if (left > kPrefetchNear) {
    const EdgeId soon = uncolored_.from_back(kPrefetchNear);
    const auto [u, v] = graph_->endpoints(soon);
    state_.prefetch_edge(soon);
    uncolored_.prefetch(soon);
    state_.prefetch_vertex(u);
    state_.prefetch_vertex(v);
  }
  const EdgeId e = uncolored_.from_back(0);
  const auto [a, b] = graph_->endpoints(e);
  const VertexId x = rng_->uniform_below(2) == 0 ? a : b;

  MsvaOutcome outcome = engine_.msva(e, x);
  try {
    state_.augment(outcome.chain.tail.edges(), outcome.final_color);
  } catch (const Error& err) {
    throw Error(Errc::kInternal, std::string("final augmentation failed: ") + err.what());
  }
  uncolored_.remove(e);
  ++edges_colored_;

  const std::uint64_t size = outcome.chain.edge_count();
  max_chain_edges_ = std::max(max_chain_edges_, size);
  total_chain_edges_ += size;

  if (checked_) {
    if (state_.color_of(e) == kBlank) throw Error(Errc::kInternal, "start edge still blank");
    if (state_.uncolored_count() != uncolored_.size()) {
      throw Error(Errc::kInternal, "uncolored set out of sync with the coloring");
    }
  }
  if (observer_) observer_(e, x, outcome);
  return e;
}

void SequentialColorer::run() {
  const auto start = std::chrono::steady_clock::now();
  while (!done()) color_next();
  wall_ms_ += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
}

RunStats SequentialColorer::stats() const {
  const EngineCounters& c = engine_.counters();
  RunStats s;
  s.edges_colored = edges_colored_;
  s.msva_calls = c.msva_calls;
  s.iterations_total = c.iterations;
  s.forward_iterations = c.forward_iterations;
  s.backward_iterations = c.backward_iterations;
  s.zero_backward_iterations = c.zero_backward_iterations;
  s.steps_discarded = c.steps_discarded;
  s.chain_calls = c.chain_calls;
  s.fan_restarts = c.fan_restarts;
  s.color_calls = c.color_calls;
  s.color_draws = c.color_draws;
  s.max_chain_edges = max_chain_edges_;
  s.total_chain_edges = total_chain_edges_;
  s.wall_ms = wall_ms_;
  return s;
}

ColorResult edge_color(const Graph& g, const Params& params, bool checked, ChainObserver observer) {
  RngStream rng(params.seed);
  SequentialColorer colorer(g, params, rng, checked);
  colorer.set_observer(std::move(observer));
  colorer.run();
  return {colorer.state(), colorer.stats()};
}

}  // namespace fastec
