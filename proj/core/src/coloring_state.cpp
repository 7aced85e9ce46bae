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

#include "fastec/coloring_state.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "fastec/errors.hpp"
#include "fastec/rng.hpp"

namespace fastec {

namespace {

std::uint64_t zobrist(EdgeId e, Color c) {
  return mix64((std::uint64_t{e} << 32) ^ c);
}

[[noreturn]] void not_shiftable(std::size_t at, const std::string& why) {
  throw Error(Errc::kNotShiftable, "chain position " + std::to_string(at) + ": " + why, at);
}

}  // namespace

ColoringState::ColoringState(const Graph& g, Color q)
    : graph_(&g),
      q_(q),
      stride_(static_cast<std::size_t>(q) + 1),
      colors_(g.num_edges(), kBlank),
      uncolored_(g.num_edges()) {
  if (q <= g.max_degree()) {
    throw Error(Errc::kQTooSmall, "q=" + std::to_string(q) + " needs to exceed max degree " +
                                      std::to_string(g.max_degree()));
  }
  table_.assign(g.num_vertices() * stride_, kNoEdge);
}

void ColoringState::recolor(EdgeId e, Color c) {
  const Color old = colors_[e];
  if (old != kBlank) fingerprint_ ^= zobrist(e, old);
  if (c != kBlank) fingerprint_ ^= zobrist(e, c);
  colors_[e] = c;
}

void ColoringState::shift(std::span<const EdgeId> chain) {
  if (chain.empty()) return;
  if (checked_) validate_shiftable(*this, chain);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const EdgeId cur = chain[i];
    const EdgeId next = chain[i + 1];
    const VertexId y = graph_->shared_vertex(cur, next);
    const VertexId x = graph_->other_end(cur, y);
    const VertexId z = graph_->other_end(next, y);
    const Color c = colors_[next];
    recolor(cur, c);
    recolor(next, kBlank);
    if (c != kBlank) {
      slot(x, c) = cur;
      slot(y, c) = cur;
      slot(z, c) = kNoEdge;
    }
  }
}

void ColoringState::augment(std::span<const EdgeId> chain, Color xi) {
  if (chain.empty()) throw Error(Errc::kPreconditionViolated, "augment on empty chain");
  const EdgeId last = chain.back();
  if (chain.size() == 1 && colors_[last] != kBlank) {
    throw Error(Errc::kNotShiftable, "augment on a colored edge", 0);
  }
  shift(chain);
  const auto [a, b] = graph_->endpoints(last);
  if (xi == kBlank || xi > q_ || slot(a, xi) != kNoEdge || slot(b, xi) != kNoEdge) {
    std::vector<EdgeId> back(chain.rbegin(), chain.rend());
    shift(back);
    throw Error(Errc::kInvalidFinalColor,
                "color " + std::to_string(xi) + " is not free at both ends of edge " +
                    std::to_string(last));
  }
  recolor(last, xi);
  slot(a, xi) = last;
  slot(b, xi) = last;
  --uncolored_;
}

bool ColoringState::missing_table_consistent() const {
  BigVector<EdgeId> rebuilt(table_.size(), kNoEdge);
  for (EdgeId e = 0; e < colors_.size(); ++e) {
    const Color c = colors_[e];
    if (c == kBlank) continue;
    if (c > q_) return false;
    const auto [a, b] = graph_->endpoints(e);
    for (VertexId v : {a, b}) {
      EdgeId& s = rebuilt[static_cast<std::size_t>(v) * stride_ + c];
      if (s != kNoEdge) return false;
      s = e;
    }
  }
  std::size_t blank = 0;
  for (Color c : colors_) blank += c == kBlank;
  return rebuilt == table_ && blank == uncolored_;
}

void validate_shiftable(const ColoringState& state, std::span<const EdgeId> chain) {
  const Graph& g = state.graph();
  const Color q = state.num_colors();
  if (chain.empty()) return;
  std::unordered_map<EdgeId, Color> shifted;
  shifted.reserve(chain.size() * 2);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const EdgeId e = chain[i];
    if (e >= g.num_edges()) not_shiftable(i, "edge id out of range");
    const Color c = i + 1 < chain.size() ? state.color_of(chain[i + 1]) : kBlank;
    if (!shifted.emplace(e, c).second) not_shiftable(i, "edge repeated");
    if (c > q) not_shiftable(i, "color out of range");
    if (i + 1 < chain.size() && g.shared_vertex(e, chain[i + 1]) == kNoVertex) {
      not_shiftable(i, "consecutive edges are not adjacent");
    }
  }
  if (state.color_of(chain.front()) != kBlank) not_shiftable(0, "start edge is colored");

  // A clash in the shifted coloring involves a chain edge with new color c
  // at vertex v and either another chain edge newly colored c at v or an
  // edge outside the chain that already holds c at v.
  std::unordered_set<std::uint64_t> placed;
  placed.reserve(chain.size() * 4);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const EdgeId e = chain[i];
    const Color c = shifted[e];
    if (c == kBlank) continue;
    const auto [a, b] = g.endpoints(e);
    for (VertexId v : {a, b}) {
      if (!placed.insert((std::uint64_t{v} << 32) | c).second) {
        not_shiftable(i, "two chain edges would share color " + std::to_string(c));
      }
      const EdgeId holder = state.edge_with_color(v, c);
      if (holder != kNoEdge && holder != e && !shifted.contains(holder)) {
        not_shiftable(i, "color " + std::to_string(c) + " already used at vertex " +
                             std::to_string(v));
      }
    }
  }
}

ProperReport verify_proper(const Graph& g, std::span<const Color> colors, Color q) {
  ProperReport report;
  std::vector<VertexId> stamp(static_cast<std::size_t>(q) + 1, kNoVertex);
  std::vector<EdgeId> holder(static_cast<std::size_t>(q) + 1, kNoEdge);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Color c = e < colors.size() ? colors[e] : kBlank;
    if (c == kBlank) continue;
    ++report.colored;
    if (c > q) report.out_of_range.push_back(e);
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (const auto& inc : g.incident(v)) {
      const Color c = inc.edge < colors.size() ? colors[inc.edge] : kBlank;
      if (c == kBlank || c > q) continue;
      if (stamp[c] == v) {
        report.conflicts.emplace_back(holder[c], inc.edge);
      } else {
        stamp[c] = v;
        holder[c] = inc.edge;
      }
    }
  }
  report.proper = report.conflicts.empty() && report.out_of_range.empty();
  return report;
}

ProperReport verify_proper(const ColoringState& state) {
  return verify_proper(state.graph(), state.edge_colors(), state.num_colors());
}

}  // namespace fastec
