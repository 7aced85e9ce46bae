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

#include "fastec/vizing_engine.hpp"

#include <algorithm>
#include <limits>

#include "fastec/alternating_path.hpp"
#include "fastec/errors.hpp"

namespace fastec {

namespace {

constexpr std::uint64_t kMaxFanRestarts = 1'000'000;
// Basic-loop iterations per msva call. Small ell on small dense graphs can
// make every cut of a path run back into its own fan.
constexpr std::uint64_t kMaxMsvaIterations = 1'000'000;

std::string str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

VisitedMap::VisitedMap(std::size_t num_vertices, std::size_t num_edges)
    : vertices_(num_vertices), edges_(num_edges) {}

void VisitedMap::reset() {
  if (generation_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(vertices_.begin(), vertices_.end(), Slot{});
    std::fill(edges_.begin(), edges_.end(), Slot{});
    generation_ = 0;
  }
  ++generation_;
}

std::optional<Intersection> first_intersection(const VisitedMap& visited, const Fan& fan,
                                               const PathChain& path) {
  std::size_t position = 0;
  auto vertex = [&](VertexId v) -> std::optional<Intersection> {
    const std::size_t at = position++;
    if (auto s = visited.vertex_step(v)) return Intersection{*s, Intersection::Kind::kVertex, v, at};
    return std::nullopt;
  };
  auto edge = [&](EdgeId e) -> std::optional<Intersection> {
    const std::size_t at = position++;
    if (auto s = visited.edge_step(e)) return Intersection{*s, Intersection::Kind::kEdge, e, at};
    return std::nullopt;
  };

  if (auto hit = vertex(fan.pivot)) return hit;
  for (std::size_t i = 0; i < fan.length(); ++i) {
    if (auto hit = vertex(fan.leaves[i])) return hit;
    if (auto hit = edge(fan.edges[i])) return hit;
  }
  for (std::size_t i = 0; i < path.path_edges.size(); ++i) {
    if (auto hit = edge(path.path_edges[i])) return hit;
    if (auto hit = vertex(path.vertices[i + 1])) return hit;
  }
  return std::nullopt;
}

VizingEngine::VizingEngine(ColoringState& state, RandomSource& rng, EngineConfig config)
    : state_(&state),
      rng_(&rng),
      config_(config),
      visited_(state.graph().num_vertices(), state.graph().num_edges()) {
  if (config_.k_max < 1 || config_.ell < 1) {
    throw Error(Errc::kPreconditionViolated, "k_max and ell must be positive");
  }
  const std::uint64_t q = state.num_colors();
  const std::uint64_t slack = q - state.graph().max_degree();
  draw_watchdog_ = 64 * ((q + slack - 1) / slack);
  if (config_.checked) state.set_checked(true);
}

void VizingEngine::internal(const std::string& what) const { throw Error(Errc::kInternal, what); }

Color VizingEngine::random_missing_color(VertexId x, Color theta) {
  ++counters_.color_calls;
  const std::uint64_t q = state_->num_colors();
  for (std::uint64_t draws = 1;; ++draws) {
    ++counters_.color_draws;
    const auto eta = static_cast<Color>(1 + rng_->uniform_below(q));
    if (eta != theta && state_->is_missing(x, eta)) return eta;
    if (draws > draw_watchdog_) {
      internal("RandomColor watchdog: " + str(draws) + " rejections at vertex " + str(x));
    }
  }
}

FanResult VizingEngine::random_fan(EdgeId e, VertexId x, Color beta) {
  const Graph& g = state_->graph();
  const VertexId y = g.other_end(e, x);
  if (state_->color_of(e) != kBlank || !g.has_endpoint(e, x)) {
    throw Error(Errc::kPreconditionViolated, "fan start edge must be blank and contain the pivot");
  }
  if (beta != kBlank && !state_->is_missing(y, beta)) {
    throw Error(Errc::kPreconditionViolated, "beta must be missing at the fan's first leaf");
  }

  FanResult r;
  Fan& fan = r.fan;
  fan.pivot = x;
  fan.leaves.reserve(std::min<std::size_t>(config_.k_max, 64));
  fan.edges.reserve(std::min<std::size_t>(config_.k_max, 64));

  for (std::uint64_t restarts = 0;; ++restarts) {
    fan.leaves.assign(1, y);
    fan.edges.assign(1, e);
    Color theta = beta;
    for (std::size_t k = 0; k < config_.k_max;) {
      const Color eta = random_missing_color(fan.leaves[k], theta);
      theta = kBlank;
      if (state_->is_missing(x, eta) || eta == beta) {
        r.delta = eta;
        r.j = k + 1;
        if (config_.checked) check_fan(r, x, beta);
        return r;
      }
      for (std::size_t j = 1; j <= k; ++j) {
        if (state_->is_missing(fan.leaves[j - 1], eta)) {
          r.delta = eta;
          r.j = j;
          if (config_.checked) check_fan(r, x, beta);
          return r;
        }
      }
      ++k;
      const EdgeId next = state_->edge_with_color(x, eta);
      fan.edges.push_back(next);
      fan.leaves.push_back(g.other_end(next, x));
    }
    ++counters_.fan_restarts;
    if (restarts + 1 >= kMaxFanRestarts) {
      internal("RandomFan watchdog: " + str(restarts + 1) + " restarts at pivot " + str(x));
    }
  }
}

void VizingEngine::check_fan(const FanResult& r, VertexId x, Color beta) const {
  const Fan& f = r.fan;
  const Graph& g = state_->graph();
  if (f.length() < 1 || f.length() > config_.k_max) internal("fan length out of range");
  if (r.j < 1 || r.j > f.length()) internal("fan index j out of range");
  for (std::size_t i = 0; i < f.length(); ++i) {
    if (g.other_end(f.edges[i], x) != f.leaves[i] || !g.has_endpoint(f.edges[i], x)) {
      internal("fan edge does not join pivot and leaf");
    }
    if ((i == 0) != (state_->color_of(f.edges[i]) == kBlank)) {
      internal("fan must start blank and continue with colored edges");
    }
    if (beta != kBlank && state_->color_of(f.edges[i]) == beta) internal("fan edge colored beta");
    for (std::size_t k = 0; k < i; ++k) {
      if (f.leaves[k] == f.leaves[i]) internal("fan leaves repeat");
    }
  }
  if (!state_->is_missing(f.v_end(), r.delta) || !state_->is_missing(f.leaves[r.j - 1], r.delta)) {
    internal("delta not missing at vEnd(F) and vEnd(F|j)");
  }
}

PathChain VizingEngine::single_edge_path(const Fan& fan) const {
  PathChain p;
  p.start_edge = fan.end_edge();
  p.start_vertex = fan.pivot;
  p.vertices.push_back(fan.v_end());
  return p;
}

PathChain VizingEngine::walk_from_fan_end(const Fan& fan, Color first, Color second) {
  state_->shift(fan.edges);
  PathChain p = walk_alternating_path(*state_, fan.end_edge(), fan.v_end(), first, second,
                                      2 * config_.ell);
  const EdgeChain back = reversed(fan.edges);
  state_->shift(back);
  return p;
}

ChainResult VizingEngine::random_vizing_chain(EdgeId e, VertexId x, Color alpha, Color beta) {
  const Graph& g = state_->graph();
  const VertexId y = g.other_end(e, x);
  const bool first_step = alpha == kBlank && beta == kBlank;
  if (!first_step && !(alpha != kBlank && beta != kBlank && alpha != beta &&
                       state_->is_missing(x, alpha) && !state_->is_missing(y, alpha) &&
                       state_->is_missing(y, beta))) {
    throw Error(Errc::kPreconditionViolated,
                "RandomChain colors: alpha=" + str(alpha) + " beta=" + str(beta));
  }
  ++counters_.chain_calls;
  const std::uint64_t calls_before = counters_.color_calls;
  const std::uint64_t restarts_before = counters_.fan_restarts;
  const std::uint64_t fp_before = state_->fingerprint();

  FanResult fr = random_fan(e, x, beta);
  ChainResult out;
  if (state_->is_missing(x, fr.delta)) {
    out.path = single_edge_path(fr.fan);
    out.fan = std::move(fr.fan);
    out.eta = fr.delta;
  } else if (fr.delta == beta) {
    out.path = walk_from_fan_end(fr.fan, alpha, beta);
    out.fan = std::move(fr.fan);
    out.eta = out.path.length() > 1 && out.path.end_color() == alpha ? beta : alpha;
  } else {
    const Color gamma = random_missing_color(x, alpha);
    PathChain full = walk_from_fan_end(fr.fan, gamma, fr.delta);
    if (full.v_end() != x) {
      out.fan = std::move(fr.fan);
      out.path = std::move(full);
    } else {
      out.fan = fr.fan.prefix(fr.j);
      out.path = walk_from_fan_end(out.fan, gamma, fr.delta);
    }
    out.eta = out.path.length() > 1 && out.path.end_color() == gamma ? fr.delta : gamma;
  }

  const std::uint64_t calls = counters_.color_calls - calls_before;
  const std::uint64_t restarts = counters_.fan_restarts - restarts_before;
  if (calls > config_.k_max * (restarts + 1) + 1) {
    internal("RandomColor calls " + str(calls) + " exceed k_max(S+1)+1 with S=" + str(restarts));
  }
  if (config_.checked) {
    if (state_->fingerprint() != fp_before) internal("RandomChain changed the coloring");
    check_chain(out, x, alpha, beta);
  }
  return out;
}

void VizingEngine::check_chain(const ChainResult& r, VertexId x, Color alpha, Color beta) {
  const PathChain& p = r.path;
  if (p.start_edge != r.fan.end_edge() || p.start_vertex != x) {
    internal("path does not start at End(F) from the pivot");
  }
  for (EdgeId f : r.fan.edges) {
    const Color c = state_->color_of(f);
    if (c == kBlank) continue;
    if (c == alpha || c == beta) internal("fan edge colored alpha or beta");
  }
  const std::size_t cap = 2 * config_.ell;
  const bool returns_to_pivot = p.length() >= 2 && p.v_end() == r.fan.pivot;
  if (p.length() < cap && !returns_to_pivot) {
    // Success-eligible: eta must complete Aug(phi, F + P, eta).
    const EdgeChain edges = concat(r.fan.edges, p.edges());
    state_->shift(edges);
    const auto [a, b] = state_->graph().endpoints(p.end_edge());
    const bool valid = state_->is_missing(a, r.eta) && state_->is_missing(b, r.eta);
    state_->shift(reversed(edges));
    if (!valid) internal("eta is not valid for End(P) after shifting F + P");
  }
}

void VizingEngine::unwind_step(const StepRecord& step) {
  state_->shift(reversed(step.edges()));
  visited_.unmark_vertex(step.fan.pivot);
  for (VertexId v : step.fan.leaves) visited_.unmark_vertex(v);
  for (EdgeId e : step.path.internal_edges()) visited_.unmark_edge(e);
}

MsvaOutcome VizingEngine::msva(EdgeId e, VertexId x) {
  ++counters_.msva_calls;
  visited_.reset();
  const Graph& g = state_->graph();
  const std::size_t cap = 2 * config_.ell;

  ChainResult first = random_vizing_chain(e, x, kBlank, kBlank);
  Fan fan = std::move(first.fan);
  PathChain path = std::move(first.path);
  Color xi = first.eta;

  MsvaOutcome outcome;
  std::vector<StepRecord>& steps = outcome.chain.steps;
  std::vector<std::uint64_t> snapshots;

  while (true) {
    ++counters_.iterations;
    if (++outcome.iterations > kMaxMsvaIterations) {
      internal("MSVA watchdog: no progress after " + str(kMaxMsvaIterations) +
               " iterations (ell too small for this graph?)");
    }
    if (path.length() < cap) {
      outcome.chain.tail = VizingChain{std::move(fan), std::move(path)};
      outcome.final_color = xi;
      if (trace_) {
        trace_({TraceEvent::Kind::kSuccess, steps.size(), 0, 0, kBlank, kBlank,
                outcome.chain.tail.path.length()});
      }
      if (config_.checked) {
        if (auto bad = audit_outcome(g, outcome, config_.ell)) internal("MSVA output: " + *bad);
      }
      return outcome;
    }

    const std::size_t k = steps.size();
    const std::size_t ell_prime = config_.ell + rng_->uniform_below(config_.ell);
    StepRecord step;
    step.index = k;
    step.path = path.prefix(ell_prime);
    step.beta = step.path.end_color();
    step.alpha = step.beta == path.alpha ? path.beta : path.alpha;
    step.fan = std::move(fan);
    step.full_path = std::move(path);

    if (config_.checked) snapshots.push_back(state_->fingerprint());
    state_->shift(step.edges());
    visited_.mark_vertex(step.fan.pivot, k);
    for (VertexId v : step.fan.leaves) visited_.mark_vertex(v, k);
    for (EdgeId f : step.path.internal_edges()) visited_.mark_edge(f, k);

    const EdgeId uv = step.path.end_edge();
    const VertexId v = step.path.v_end();
    const VertexId u = g.other_end(uv, v);
    const Color alpha = step.alpha;
    const Color beta = step.beta;
    steps.push_back(std::move(step));

    ChainResult cand = random_vizing_chain(uv, u, alpha, beta);

    if (const auto hit = first_intersection(visited_, cand.fan, cand.path)) {
      const std::size_t j = hit->step;
      if (j > k) internal("intersection tagged with a future step");
      if (j == k) {
        ++counters_.zero_backward_iterations;
        if (hit->kind != Intersection::Kind::kVertex) {
          internal("0-backward iteration whose first intersection is not a vertex of V(F_k)");
        }
      }
      for (std::size_t s = k + 1; s-- > j;) unwind_step(steps[s]);
      if (config_.checked) {
        if (state_->fingerprint() != snapshots[j]) internal("backward step did not restore psi");
        snapshots.resize(j);
      }
      fan = std::move(steps[j].fan);
      path = std::move(steps[j].full_path);
      steps.resize(j);
      xi = path.end_color() == path.alpha ? path.beta : path.alpha;
      ++counters_.backward_iterations;
      ++outcome.backward_iterations;
      counters_.steps_discarded += k - j;
      if (trace_) {
        trace_({TraceEvent::Kind::kBackward, k + 1, j, ell_prime, alpha, beta, path.length()});
      }
    } else if (cand.path.length() >= 2 && cand.path.length() < cap &&
               cand.path.v_end() == cand.fan.pivot) {
      internal("MSVA reached the FAIL branch");
    } else {
      fan = std::move(cand.fan);
      path = std::move(cand.path);
      xi = cand.eta;
      ++counters_.forward_iterations;
      if (trace_) {
        trace_({TraceEvent::Kind::kForward, k, 0, ell_prime, alpha, beta, path.length()});
      }
    }
  }
}

std::optional<std::string> audit_outcome(const Graph& g, const MsvaOutcome& outcome,
                                         std::size_t ell) {
  const MultiStepChain& chain = outcome.chain;
  for (const auto& s : chain.steps) {
    const std::string at = "step " + std::to_string(s.index) + ": ";
    if (s.path.length() < ell || s.path.length() > 2 * ell - 1) {
      return at + "shifted path length " + std::to_string(s.path.length()) + " outside [ell, 2ell-1]";
    }
    if (s.full_path.length() != 2 * ell) {
      return at + "full path length " + std::to_string(s.full_path.length()) + " != 2ell";
    }
    if (s.full_path.prefix(s.path.length()) != s.path) return at + "path is not a prefix of full path";
    if (s.path.end_color() != s.beta || s.alpha == s.beta) return at + "alpha/beta labels wrong";
  }
  if (chain.tail.path.length() >= 2 * ell) return std::string("final path not shorter than 2ell");
  return find_intersection_violation(g, chain);
}

}  // namespace fastec
