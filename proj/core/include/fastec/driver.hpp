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

#ifndef FASTEC_DRIVER_HPP_
#define FASTEC_DRIVER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fastec/coloring_state.hpp"
#include "fastec/memory.hpp"
#include "fastec/params.hpp"
#include "fastec/rng.hpp"
#include "fastec/vizing_engine.hpp"

namespace fastec {

// The set U of uncolored edges: a dense array with swap-remove plus a
// position index, so sample, remove and contains are O(1).
class UncoloredSet {
 public:
  UncoloredSet() = default;
  explicit UncoloredSet(std::size_t m) { init(m); }

  void init(std::size_t m);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(EdgeId e) const { return e < pos_.size() && pos_[e] != kNoEdge; }

  // Uniform member. Throws Error{kPreconditionViolated} on an empty set.
  EdgeId sample(RandomSource& rng) const;

  // Puts the members in uniformly random order. Taking back() and removing
  // it repeatedly is then distributed exactly like repeated sample/remove,
  // but the upcoming picks are known in advance.
  void shuffle(RandomSource& rng);

  // Member that is k-th from the back of the current order.
  EdgeId from_back(std::size_t k) const { return items_[items_.size() - 1 - k]; }

  // Throws Error{kPreconditionViolated} if e is not a member.
  void remove(EdgeId e);

  void prefetch(EdgeId e) const { __builtin_prefetch(pos_.data() + e); }

  std::span<const EdgeId> members() const noexcept { return items_; }

 private:
  BigVector<EdgeId> items_;
  BigVector<EdgeId> pos_;
};

struct RunStats {
  std::uint64_t edges_colored = 0;
  std::uint64_t msva_calls = 0;
  std::uint64_t iterations_total = 0;  // T
  std::uint64_t forward_iterations = 0;
  std::uint64_t backward_iterations = 0;
  std::uint64_t zero_backward_iterations = 0;
  std::uint64_t steps_discarded = 0;
  std::uint64_t chain_calls = 0;
  std::uint64_t fan_restarts = 0;  // S
  std::uint64_t color_calls = 0;   // K
  std::uint64_t color_draws = 0;   // Y
  std::uint64_t max_chain_edges = 0;
  std::uint64_t total_chain_edges = 0;
  double wall_ms = 0.0;

  double avg_chain_edges() const noexcept {
    return msva_calls == 0 ? 0.0
                           : static_cast<double>(total_chain_edges) / static_cast<double>(msva_calls);
  }
};

// Called after each augmentation with the uncolored edge, the chosen pivot
// and the chain that colored it. The state has already been augmented.
using ChainObserver = std::function<void(EdgeId, VertexId, const MsvaOutcome&)>;

// The sequential coloring loop, exposed one edge at a time so callers can
// inspect intermediate states.
class SequentialColorer {
 public:
  // Borrows g and rng. Graphs with max degree <= 1 are colored 1 up front.
  // The processing order of the edges is drawn from rng here.
  SequentialColorer(const Graph& g, const Params& params, RandomSource& rng, bool checked = false);

  bool done() const noexcept { return uncolored_.empty(); }

  // Colors the next edge of the random order, a uniform uncolored edge.
  // Returns it.
  EdgeId color_next();

  // Runs to completion and records wall time.
  void run();

  const ColoringState& state() const noexcept { return state_; }
  ColoringState& state() noexcept { return state_; }
  VizingEngine& engine() noexcept { return engine_; }
  const UncoloredSet& uncolored() const noexcept { return uncolored_; }
  const Params& params() const noexcept { return params_; }

  RunStats stats() const;

  void set_observer(ChainObserver observer) { observer_ = std::move(observer); }

 private:
  const Graph* graph_;
  Params params_;
  RandomSource* rng_;
  bool checked_;
  ColoringState state_;
  VizingEngine engine_;
  UncoloredSet uncolored_;
  ChainObserver observer_;
  std::uint64_t edges_colored_ = 0;
  std::uint64_t max_chain_edges_ = 0;
  std::uint64_t total_chain_edges_ = 0;
  double wall_ms_ = 0.0;
};

struct ColorResult {
  ColoringState state;
  RunStats stats;
};

// Colors every edge of g with colors 1..params.q, drawing from a stream
// seeded with params.seed.
ColorResult edge_color(const Graph& g, const Params& params, bool checked = false,
                       ChainObserver observer = {});

}  // namespace fastec

#endif  // FASTEC_DRIVER_HPP_
