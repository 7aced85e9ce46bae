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

#ifndef FASTEC_GRAPH_HPP_
#define FASTEC_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fastec/memory.hpp"
#include "fastec/types.hpp"

namespace fastec {

struct Incidence {
  VertexId neighbor;
  EdgeId edge;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

using EdgePair = std::pair<VertexId, VertexId>;

// Immutable simple graph. Edge ids follow input order, endpoints are stored
// as (min, max) and each adjacency list keeps input order. Adjacency lives in
// one CSR array so a graph can be shared read-only by many colorings.
class Graph {
 public:
  Graph() = default;

  // Throws Error{kSelfLoop, kDuplicateEdge, kVertexOutOfRange} with the
  // offending edge index.
  static Graph build(std::size_t num_vertices, std::span<const EdgePair> edges);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return endpoints_.size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }

  const EdgePair& endpoints(EdgeId e) const { return endpoints_[e]; }
  std::span<const EdgePair> edges() const noexcept { return endpoints_; }

  VertexId other_end(EdgeId e, VertexId v) const {
    const auto& [a, b] = endpoints_[e];
    return a == v ? b : a;
  }

  bool has_endpoint(EdgeId e, VertexId v) const {
    const auto& [a, b] = endpoints_[e];
    return a == v || b == v;
  }

  // Common endpoint of two distinct edges, or kNoVertex.
  VertexId shared_vertex(EdgeId e, EdgeId f) const;

  std::span<const Incidence> incident(VertexId v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  // Linear scan of the smaller adjacency list; intended for tools and tests.
  EdgeId find_edge(VertexId u, VertexId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::size_t max_degree_ = 0;
  BigVector<EdgePair> endpoints_;
  BigVector<std::size_t> offsets_{0};
  BigVector<Incidence> incidence_;
};

}  // namespace fastec

#endif  // FASTEC_GRAPH_HPP_
