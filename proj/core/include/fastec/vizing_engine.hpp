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

#ifndef FASTEC_VIZING_ENGINE_HPP_
#define FASTEC_VIZING_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fastec/chain.hpp"
#include "fastec/coloring_state.hpp"
#include "fastec/memory.hpp"
#include "fastec/rng.hpp"

namespace fastec {

// Vertex and edge marks tagged with the index of the chain step that owns
// them. A mark is live only while its generation matches the map's, so
// reset() is O(1).
class VisitedMap {
 public:
  VisitedMap(std::size_t num_vertices, std::size_t num_edges);

  void reset();

  void mark_vertex(VertexId v, std::size_t step) { set(vertices_[v], step); }
  void mark_edge(EdgeId e, std::size_t step) { set(edges_[e], step); }
  void unmark_vertex(VertexId v) { vertices_[v].generation = 0; }
  void unmark_edge(EdgeId e) { edges_[e].generation = 0; }

  std::optional<std::size_t> vertex_step(VertexId v) const { return get(vertices_[v]); }
  std::optional<std::size_t> edge_step(EdgeId e) const { return get(edges_[e]); }

  std::uint32_t generation() const noexcept { return generation_; }

 private:
  struct Slot {
    std::uint32_t generation = 0;
    std::uint32_t step = 0;
  };

  void set(Slot& s, std::size_t step) const {
    s.generation = generation_;
    s.step = static_cast<std::uint32_t>(step);
  }
  std::optional<std::size_t> get(const Slot& s) const {
    if (s.generation != generation_) return std::nullopt;
    return s.step;
  }

  BigVector<Slot> vertices_;
  BigVector<Slot> edges_;
  std::uint32_t generation_ = 1;
};

struct Intersection {
  enum class Kind { kVertex, kEdge };

  std::size_t step;
  Kind kind;
  std::uint32_t id;       // vertex or edge id
  std::size_t position;   // index in the candidate's scan order
};

// First marked element of the candidate F + P, scanning the pivot, then each
// leaf followed by its fan edge, then each path edge followed by its far
// endpoint. "First" is by position in the candidate, not by step index.
std::optional<Intersection> first_intersection(const VisitedMap& visited, const Fan& fan,
                                               const PathChain& path);

struct EngineConfig {
  std::size_t k_max = 8;
  std::size_t ell = 4;
  // Enables shiftability validation, state hashing around reversible work
  // and the fan/chain postcondition checks. Violations throw kInternal.
  bool checked = false;
};

// Empirical counterparts of the runtime analysis: basic-loop passes (T),
// fan restarts (S), RandomColor calls (K) and their draws (Y).
struct EngineCounters {
  std::uint64_t msva_calls = 0;
  std::uint64_t iterations = 0;
  std::uint64_t forward_iterations = 0;
  std::uint64_t backward_iterations = 0;
  std::uint64_t zero_backward_iterations = 0;
  std::uint64_t steps_discarded = 0;  // sum of r over r-backward iterations
  std::uint64_t chain_calls = 0;
  std::uint64_t fan_restarts = 0;
  std::uint64_t color_calls = 0;
  std::uint64_t color_draws = 0;
};

struct TraceEvent {
  enum class Kind { kForward, kBackward, kSuccess };

  Kind kind;
  std::size_t k;            // steps in the chain before the event
  std::size_t j;            // backward target (kBackward only)
  std::size_t ell_prime;    // truncation length (kForward, kBackward)
  Color alpha;
  Color beta;
  std::size_t path_length;  // candidate path length after the event
};

struct FanResult {
  Fan fan;
  Color delta = kBlank;
  std::size_t j = 0;  // 1 <= j <= fan.length()
};

struct ChainResult {
  Fan fan;
  PathChain path;
  Color eta = kBlank;
};

struct MsvaOutcome {
  MultiStepChain chain;
  Color final_color = kBlank;
  std::uint64_t iterations = 0;
  std::uint64_t backward_iterations = 0;
};

// The randomized chain builders. One engine owns the visited marks and
// borrows a coloring and a random source; it is single-threaded.
class VizingEngine {
 public:
  VizingEngine(ColoringState& state, RandomSource& rng, EngineConfig config);

  const EngineConfig& config() const noexcept { return config_; }
  const EngineCounters& counters() const noexcept { return counters_; }
  ColoringState& state() noexcept { return *state_; }

  void set_trace(std::function<void(const TraceEvent&)> hook) { trace_ = std::move(hook); }

  // Uniform color of M(x) \ {theta} by rejection from [q].
  Color random_missing_color(VertexId x, Color theta);

  // Random fan around pivot x starting at the blank edge e, restarting from
  // scratch whenever it would exceed k_max edges. beta is blank or missing
  // at the other end of e. Returns delta missing at vEnd(F) and vEnd(F|j).
  FanResult random_fan(EdgeId e, VertexId x, Color beta);

  // Random Vizing chain F + P with Start(F) = e and Pivot(F) = x. Either
  // alpha = beta = blank, or alpha is missing at x but not at the other end
  // of e and beta is missing there. The coloring is unchanged on return.
  ChainResult random_vizing_chain(EdgeId e, VertexId x, Color alpha, Color beta);

  // Multi-step Vizing algorithm from the blank edge e with first pivot x.
  //
  // On return the state equals Shift(phi, C) for the completed steps C of
  // outcome.chain; augmenting outcome.chain.tail with outcome.final_color
  // finishes Aug(phi, C + F + P, xi).
  MsvaOutcome msva(EdgeId e, VertexId x);

 private:
  PathChain walk_from_fan_end(const Fan& fan, Color first, Color second);
  PathChain single_edge_path(const Fan& fan) const;
  void unwind_step(const StepRecord& step);
  [[noreturn]] void internal(const std::string& what) const;

  void check_fan(const FanResult& r, VertexId x, Color beta) const;
  void check_chain(const ChainResult& r, VertexId x, Color alpha, Color beta);

  ColoringState* state_;
  RandomSource* rng_;
  EngineConfig config_;
  VisitedMap visited_;
  EngineCounters counters_;
  std::function<void(const TraceEvent&)> trace_;
  std::uint64_t draw_watchdog_;
};

// Structural audit of a successful outcome: non-intersection, boundary
// links, every shifted path of length in [ell, 2ell-1] cut from a full path
// of length 2ell, and a final path shorter than 2ell.
std::optional<std::string> audit_outcome(const Graph& g, const MsvaOutcome& outcome,
                                         std::size_t ell);

}  // namespace fastec

#endif  // FASTEC_VIZING_ENGINE_HPP_
