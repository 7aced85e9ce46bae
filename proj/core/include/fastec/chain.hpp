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

#ifndef FASTEC_CHAIN_HPP_
#define FASTEC_CHAIN_HPP_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fastec/graph.hpp"
#include "fastec/types.hpp"

namespace fastec {

// A chain is a sequence of distinct edges, consecutive ones adjacent.
using EdgeChain = std::vector<EdgeId>;

// C|j, the first j edges. Requires 1 <= j <= size.
EdgeChain initial_segment(std::span<const EdgeId> chain, std::size_t j);

// C1 + C2, sharing the boundary edge. Throws Error{kBoundaryMismatch} unless
// the last edge of `first` is the first edge of `second`.
EdgeChain concat(std::span<const EdgeId> first, std::span<const EdgeId> second);

// C*, the chain read backwards.
EdgeChain reversed(std::span<const EdgeId> chain);

// Edges x y_0, ..., x y_{k-1} around the pivot x. The first edge is the one
// being colored; the others are colored.
struct Fan {
  VertexId pivot = kNoVertex;
  std::vector<VertexId> leaves;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
  EdgeId start_edge() const { return edges.front(); }
  EdgeId end_edge() const { return edges.back(); }
  VertexId v_start() const { return leaves.front(); }
  VertexId v_end() const { return leaves.back(); }

  // F|j.
  Fan prefix(std::size_t j) const;

  friend bool operator==(const Fan&, const Fan&) = default;
};

// Start edge x_0 x_1 followed by the path x_1 x_2 ... x_k whose edges are
// colored alpha, beta, alpha, ... in the coloring the walk was taken in.
// start_vertex (x_0) is kept explicitly so single-edge chains are oriented.
struct PathChain {
  EdgeId start_edge = kNoEdge;
  VertexId start_vertex = kNoVertex;
  std::vector<EdgeId> path_edges;   // e_1 .. e_k
  std::vector<VertexId> vertices;   // x_1 .. x_k (x_1 is the far end of start_edge)
  Color alpha = kBlank;             // color of e_1
  Color beta = kBlank;              // color of e_2
  bool reached_cap = false;         // walk stopped because length hit the cap

  std::size_t length() const noexcept { return 1 + path_edges.size(); }
  EdgeId end_edge() const { return path_edges.empty() ? start_edge : path_edges.back(); }
  VertexId v_start() const noexcept { return start_vertex; }
  VertexId v_end() const { return vertices.back(); }

  // Color of the i-th chain edge (i >= 1) as recorded by the walk.
  Color color_at(std::size_t i) const { return i % 2 == 1 ? alpha : beta; }
  Color end_color() const { return path_edges.empty() ? kBlank : color_at(path_edges.size()); }

  // Edges other than the first and last.
  std::span<const EdgeId> internal_edges() const {
    if (path_edges.size() < 2) return {};
    return {path_edges.data(), path_edges.size() - 1};
  }

  // P|len. Requires 1 <= len <= length().
  PathChain prefix(std::size_t len) const;

  EdgeChain edges() const;

  friend bool operator==(const PathChain&, const PathChain&) = default;
};

// Fan plus path with path.start_edge == fan.end_edge().
struct VizingChain {
  Fan fan;
  PathChain path;

  // F + P as one edge sequence.
  EdgeChain edges() const;
  std::size_t length() const noexcept { return fan.length() + path.length() - 1; }
};

// One completed step of a multi-step chain. `path` is the random initial
// segment actually shifted; `full_path` is the capped walk it was cut from.
// alpha/beta are named so that `path` ends on a beta edge.
struct StepRecord {
  Fan fan;
  PathChain path;
  PathChain full_path;
  Color alpha = kBlank;
  Color beta = kBlank;
  std::size_t index = 0;

  EdgeChain edges() const;
};

// F_0 + P_0 + ... + F_{k-1} + P_{k-1} followed by the final candidate.
struct MultiStepChain {
  std::vector<StepRecord> steps;
  VizingChain tail;

  EdgeId start_edge() const;
  VertexId start_vertex() const;

  // Flattened chain; consecutive pieces share their boundary edge.
  EdgeChain edges() const;

  // Same as edges().size() without materializing.
  std::size_t edge_count() const;
};

// Checks: for i < j, V(F_i) and V(F_j + P_j) are disjoint and no internal
// edge of P_i lies on F_j + P_j (the tail counts as the last step). Also
// checks the boundary links between consecutive steps. Returns a description
// of the first violation.
std::optional<std::string> find_intersection_violation(const Graph& g,
                                                       const MultiStepChain& chain);

// Graphviz rendering: one node per chain vertex, one edge per chain edge
// labeled "s<step> c<color>", in step order then chain order.
void write_dot(std::ostream& out, const Graph& g, const MultiStepChain& chain,
               const std::function<Color(EdgeId)>& color_of);

}  // namespace fastec

#endif  // FASTEC_CHAIN_HPP_
