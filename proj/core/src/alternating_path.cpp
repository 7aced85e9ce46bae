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

#include "fastec/alternating_path.hpp"

#include <string>

#include "fastec/errors.hpp"

namespace fastec {

int degree_ab(const ColoringState& state, VertexId v, Color alpha, Color beta) {
  return static_cast<int>(!state.is_missing(v, alpha)) + static_cast<int>(!state.is_missing(v, beta));
}

PathChain walk_alternating_path(const ColoringState& state, EdgeId start_edge, VertexId from,
                                Color alpha, Color beta, std::size_t cap) {
  const Graph& g = state.graph();
  if (!g.has_endpoint(start_edge, from)) {
    throw Error(Errc::kBadStart, "vertex " + std::to_string(from) + " is not on edge " +
                                     std::to_string(start_edge));
  }
  if (state.color_of(start_edge) != kBlank) {
    throw Error(Errc::kBadStart, "start edge " + std::to_string(start_edge) + " is colored");
  }
  if (alpha == beta || alpha == kBlank || beta == kBlank) {
    throw Error(Errc::kBadStart, "alternating path needs two distinct colors");
  }
  if (degree_ab(state, from, alpha, beta) == 2) {
    throw Error(Errc::kBadStart, "vertex " + std::to_string(from) + " has two alternating edges");
  }
  if (cap == 0) throw Error(Errc::kBadStart, "cap must be positive");

  PathChain p;
  p.start_edge = start_edge;
  p.start_vertex = g.other_end(start_edge, from);
  p.alpha = alpha;
  p.beta = beta;
  p.vertices.push_back(from);

  VertexId cur = from;
  Color want = alpha;
  while (p.length() < cap) {
    const EdgeId e = state.edge_with_color(cur, want);
    if (e == kNoEdge) break;
    cur = g.other_end(e, cur);
    p.path_edges.push_back(e);
    p.vertices.push_back(cur);
    want = want == alpha ? beta : alpha;
  }
  p.reached_cap = p.length() == cap;
  return p;
}

std::optional<Color> happy_color(const ColoringState& state, EdgeId e) {
  const auto [x, y] = state.graph().endpoints(e);
  for (Color c = 1; c <= state.num_colors(); ++c) {
    if (state.is_missing(x, c) && state.is_missing(y, c)) return c;
  }
  return std::nullopt;
}

bool is_hopeful_edge(const ColoringState& state, EdgeId e, Color alpha, Color beta) {
  const auto [x, y] = state.graph().endpoints(e);
  return state.color_of(e) == kBlank && degree_ab(state, x, alpha, beta) < 2 &&
         degree_ab(state, y, alpha, beta) < 2;
}

bool are_related(const ColoringState& state, VertexId x, VertexId y, Color alpha, Color beta) {
  if (x == y) return true;
  const Graph& g = state.graph();
  // Walk both directions from x; components are paths or cycles.
  for (Color first : {alpha, beta}) {
    VertexId cur = x;
    Color want = first;
    for (std::size_t steps = 0; steps <= g.num_vertices(); ++steps) {
      const EdgeId e = state.edge_with_color(cur, want);
      if (e == kNoEdge) break;
      cur = g.other_end(e, cur);
      if (cur == y) return true;
      if (cur == x) return false;  // closed cycle without y
      want = want == alpha ? beta : alpha;
    }
  }
  return false;
}

bool is_successful_edge(const ColoringState& state, EdgeId e, Color alpha, Color beta) {
  const auto [x, y] = state.graph().endpoints(e);
  return is_hopeful_edge(state, e, alpha, beta) && !are_related(state, x, y, alpha, beta);
}

}  // namespace fastec
