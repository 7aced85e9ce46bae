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

#include "fastec/chain.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "fastec/errors.hpp"

namespace fastec {

EdgeChain initial_segment(std::span<const EdgeId> chain, std::size_t j) {
  if (j == 0 || j > chain.size()) {
    throw Error(Errc::kPreconditionViolated, "initial segment length " + std::to_string(j) +
                                                 " outside 1.." + std::to_string(chain.size()));
  }
  return {chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(j)};
}

EdgeChain concat(std::span<const EdgeId> first, std::span<const EdgeId> second) {
  if (first.empty() || second.empty() || first.back() != second.front()) {
    throw Error(Errc::kBoundaryMismatch, "End(C1) differs from Start(C2)");
  }
  EdgeChain out(first.begin(), first.end());
  out.insert(out.end(), second.begin() + 1, second.end());
  return out;
}

EdgeChain reversed(std::span<const EdgeId> chain) { return {chain.rbegin(), chain.rend()}; }

Fan Fan::prefix(std::size_t j) const {
  if (j == 0 || j > length()) {
    throw Error(Errc::kPreconditionViolated, "fan prefix " + std::to_string(j) + " of " +
                                                 std::to_string(length()));
  }
  Fan f;
  f.pivot = pivot;
  f.leaves.assign(leaves.begin(), leaves.begin() + static_cast<std::ptrdiff_t>(j));
  f.edges.assign(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(j));
  return f;
}

PathChain PathChain::prefix(std::size_t len) const {
  if (len == 0 || len > length()) {
    throw Error(Errc::kPreconditionViolated, "path prefix " + std::to_string(len) + " of " +
                                                 std::to_string(length()));
  }
  PathChain p;
  p.start_edge = start_edge;
  p.start_vertex = start_vertex;
  p.path_edges.assign(path_edges.begin(), path_edges.begin() + static_cast<std::ptrdiff_t>(len - 1));
  p.vertices.assign(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(len));
  p.alpha = alpha;
  p.beta = beta;
  p.reached_cap = false;
  return p;
}

EdgeChain PathChain::edges() const {
  EdgeChain out;
  out.reserve(length());
  out.push_back(start_edge);
  out.insert(out.end(), path_edges.begin(), path_edges.end());
  return out;
}

EdgeChain VizingChain::edges() const {
  EdgeChain out = fan.edges;
  out.insert(out.end(), path.path_edges.begin(), path.path_edges.end());
  return out;
}

EdgeChain StepRecord::edges() const {
  EdgeChain out = fan.edges;
  out.insert(out.end(), path.path_edges.begin(), path.path_edges.end());
  return out;
}

EdgeId MultiStepChain::start_edge() const {
  return steps.empty() ? tail.fan.start_edge() : steps.front().fan.start_edge();
}

VertexId MultiStepChain::start_vertex() const {
  return steps.empty() ? tail.fan.v_start() : steps.front().fan.v_start();
}

EdgeChain MultiStepChain::edges() const {
  EdgeChain out;
  out.reserve(edge_count());
  auto append = [&out](const EdgeChain& piece) {
    // Step boundaries share End(P_i) == Start(F_{i+1}).
    const std::size_t skip = out.empty() ? 0 : 1;
    out.insert(out.end(), piece.begin() + static_cast<std::ptrdiff_t>(skip), piece.end());
  };
  for (const auto& s : steps) append(s.edges());
  append(tail.edges());
  return out;
}

std::size_t MultiStepChain::edge_count() const {
  std::size_t total = tail.length();
  for (const auto& s : steps) total += s.fan.length() + s.path.length() - 1;
  return total - steps.size();
}

namespace {

struct PieceView {
  const Fan* fan;
  const PathChain* path;
};

std::vector<VertexId> piece_vertices(const PieceView& p) {
  std::vector<VertexId> out;
  out.push_back(p.fan->pivot);
  out.insert(out.end(), p.fan->leaves.begin(), p.fan->leaves.end());
  out.insert(out.end(), p.path->vertices.begin(), p.path->vertices.end());
  return out;
}

std::vector<EdgeId> piece_edges(const PieceView& p) {
  std::vector<EdgeId> out = p.fan->edges;
  out.insert(out.end(), p.path->path_edges.begin(), p.path->path_edges.end());
  return out;
}

}  // namespace

std::optional<std::string> find_intersection_violation(const Graph& g,
                                                       const MultiStepChain& chain) {
  std::vector<PieceView> pieces;
  for (const auto& s : chain.steps) pieces.push_back({&s.fan, &s.path});
  pieces.push_back({&chain.tail.fan, &chain.tail.path});

  std::unordered_map<VertexId, std::size_t> fan_vertices;
  std::unordered_map<EdgeId, std::size_t> internal_edges;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const auto& p = pieces[j];
    if (p.path->start_edge != p.fan->end_edge() || p.path->start_vertex != p.fan->pivot) {
      return "step " + std::to_string(j) + ": path does not hang off the fan end";
    }
    for (std::size_t i = 0; i < p.fan->length(); ++i) {
      if (g.endpoints(p.fan->edges[i]) !=
          EdgePair{std::min(p.fan->pivot, p.fan->leaves[i]), std::max(p.fan->pivot, p.fan->leaves[i])}) {
        return "step " + std::to_string(j) + ": fan edge " + std::to_string(i) +
               " does not join pivot and leaf";
      }
    }
    if (j > 0) {
      const auto& prev = pieces[j - 1];
      if (p.fan->start_edge() != prev.path->end_edge() ||
          p.fan->v_start() != prev.path->v_end()) {
        return "step " + std::to_string(j) + ": fan does not start at End(P_" +
               std::to_string(j - 1) + ")";
      }
    }
    for (VertexId v : piece_vertices(p)) {
      if (auto it = fan_vertices.find(v); it != fan_vertices.end()) {
        return "vertex " + std::to_string(v) + " of step " + std::to_string(j) +
               " lies on fan " + std::to_string(it->second);
      }
    }
    for (EdgeId e : piece_edges(p)) {
      if (auto it = internal_edges.find(e); it != internal_edges.end()) {
        return "edge " + std::to_string(e) + " of step " + std::to_string(j) +
               " is internal to path " + std::to_string(it->second);
      }
    }
    fan_vertices.emplace(p.fan->pivot, j);
    for (VertexId v : p.fan->leaves) fan_vertices.emplace(v, j);
    for (EdgeId e : p.path->internal_edges()) internal_edges.emplace(e, j);
  }
  return std::nullopt;
}

void write_dot(std::ostream& out, const Graph& g, const MultiStepChain& chain,
               const std::function<Color(EdgeId)>& color_of) {
  out << "graph chain {\n";
  std::unordered_set<VertexId> emitted;
  std::vector<std::pair<EdgeId, std::size_t>> ordered;
  for (const auto& s : chain.steps) {
    for (EdgeId e : s.edges()) ordered.emplace_back(e, s.index);
  }
  for (EdgeId e : chain.tail.edges()) ordered.emplace_back(e, chain.steps.size());

  std::unordered_set<EdgeId> drawn;
  for (const auto& [e, step] : ordered) {
    const auto [u, v] = g.endpoints(e);
    for (VertexId x : {u, v}) {
      if (emitted.insert(x).second) out << "  " << x << " [label=\"" << x << "\"];\n";
    }
  }
  for (const auto& [e, step] : ordered) {
    // Boundary edges belong to two consecutive pieces; draw them once.
    if (!drawn.insert(e).second) continue;
    const auto [u, v] = g.endpoints(e);
    out << "  " << u << " -- " << v << " [label=\"s" << step << " c" << color_of(e) << "\"];\n";
  }
  out << "}\n";
}

}  // namespace fastec
