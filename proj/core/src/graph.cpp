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

#include "fastec/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "fastec/errors.hpp"

namespace fastec {

namespace {

std::string pair_text(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::build(std::size_t num_vertices, std::span<const EdgePair> edges) {
  if (num_vertices >= kNoVertex) {
    throw Error(Errc::kVertexOutOfRange, "vertex count too large");
  }
  if (edges.size() >= kNoEdge) {
    throw Error(Errc::kParse, "edge count too large");
  }
  Graph g;
  g.num_vertices_ = num_vertices;
  g.endpoints_.reserve(edges.size());

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::vector<std::size_t> degree(num_vertices, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= num_vertices || v >= num_vertices) {
      throw Error(Errc::kVertexOutOfRange,
                  "edge " + std::to_string(i) + " " + pair_text(u, v) +
                      " references a vertex outside 0.." +
                      std::to_string(num_vertices == 0 ? 0 : num_vertices - 1),
                  i);
    }
    if (u == v) {
      throw Error(Errc::kSelfLoop,
                  "edge " + std::to_string(i) + " " + pair_text(u, v) + " is a self-loop", i);
    }
    const VertexId lo = std::min(u, v);
    const VertexId hi = std::max(u, v);
    const std::uint64_t key = (std::uint64_t{lo} << 32) | hi;
    if (!seen.insert(key).second) {
      throw Error(Errc::kDuplicateEdge,
                  "edge " + std::to_string(i) + " " + pair_text(u, v) + " appears twice", i);
    }
    g.endpoints_.emplace_back(lo, hi);
    ++degree[u];
    ++degree[v];
  }

  g.offsets_.assign(num_vertices + 1, 0);
  for (std::size_t v = 0; v < num_vertices; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.max_degree_ = std::max(g.max_degree_, degree[v]);
  }
  g.incidence_.resize(g.offsets_[num_vertices]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId e = 0; e < g.endpoints_.size(); ++e) {
    // Insert in input orientation so both lists follow input edge order.
    const auto [u, v] = edges[e];
    g.incidence_[fill[u]++] = {v, e};
    g.incidence_[fill[v]++] = {u, e};
  }
  return g;
}

VertexId Graph::shared_vertex(EdgeId e, EdgeId f) const {
  const auto& [a, b] = endpoints_[e];
  if (has_endpoint(f, a)) return a;
  if (has_endpoint(f, b)) return b;
  return kNoVertex;
}

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
  if (u >= num_vertices_ || v >= num_vertices_) return kNoEdge;
  const VertexId from = degree(u) <= degree(v) ? u : v;
  const VertexId to = from == u ? v : u;
  for (const auto& inc : incident(from)) {
    if (inc.neighbor == to) return inc.edge;
  }
  return kNoEdge;
}

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kParse: return "ParseError";
    case Errc::kSelfLoop: return "SelfLoop";
    case Errc::kDuplicateEdge: return "DuplicateEdge";
    case Errc::kVertexOutOfRange: return "VertexOutOfRange";
    case Errc::kInfeasible: return "Infeasible";
    case Errc::kQTooSmall: return "QTooSmall";
    case Errc::kNotShiftable: return "NotShiftable";
    case Errc::kInvalidFinalColor: return "InvalidFinalColor";
    case Errc::kBadStart: return "BadStart";
    case Errc::kBoundaryMismatch: return "BoundaryMismatch";
    case Errc::kPreconditionViolated: return "PreconditionViolated";
    case Errc::kEpsilonTooSmall: return "EpsilonTooSmall";
    case Errc::kInvalidOverride: return "InvalidOverride";
    case Errc::kInternal: return "InternalError";
  }
  return "Error";
}

}  // namespace fastec
