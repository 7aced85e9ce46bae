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

#ifndef FASTEC_COLORING_STATE_HPP_
#define FASTEC_COLORING_STATE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fastec/graph.hpp"
#include "fastec/memory.hpp"
#include "fastec/types.hpp"

namespace fastec {

// A proper partial q-edge-coloring together with, for every vertex x and
// color c, the edge at x colored c (or kNoEdge when c is missing at x). The
// table is one flat row of q+1 entries per vertex, so membership, partner
// lookup and every color update are O(1).
//
// The state keeps a pointer to its graph; the graph must outlive it. States
// are plain values: copy one to snapshot it.
class ColoringState {
 public:
  // Throws Error{kQTooSmall} unless q >= max_degree + 1.
  ColoringState(const Graph& g, Color q);

  const Graph& graph() const noexcept { return *graph_; }
  Color num_colors() const noexcept { return q_; }

  Color color_of(EdgeId e) const { return colors_[e]; }
  std::span<const Color> edge_colors() const noexcept { return colors_; }

  bool is_missing(VertexId x, Color c) const { return row(x)[c] == kNoEdge; }

  // Edge at x colored c, or kNoEdge.
  EdgeId edge_with_color(VertexId x, Color c) const { return row(x)[c]; }

  // Neighbor y with color(xy) == c, or kNoVertex.
  VertexId missing_partner(VertexId x, Color c) const {
    const EdgeId e = row(x)[c];
    return e == kNoEdge ? kNoVertex : graph_->other_end(e, x);
  }

  // Hint that x's row and the color of e will be read soon.
  void prefetch_vertex(VertexId x) const {
    const EdgeId* r = table_.data() + static_cast<std::size_t>(x) * stride_;
    __builtin_prefetch(r);
    __builtin_prefetch(r + stride_ - 1);
  }
  void prefetch_edge(EdgeId e) const { __builtin_prefetch(colors_.data() + e); }

  std::size_t uncolored_count() const noexcept { return uncolored_; }
  bool complete() const noexcept { return uncolored_ == 0; }

  // Order-independent hash of the edge coloring, maintained incrementally.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  // Shift(phi, chain): edge i takes the color of edge i+1 and the last edge
  // becomes blank. The chain must be shiftable; in checked mode this is
  // validated first (Error{kNotShiftable}), otherwise it is trusted.
  void shift(std::span<const EdgeId> chain);

  // Aug(phi, chain, xi): shift, then color the last edge xi. Throws
  // Error{kInvalidFinalColor} (leaving the state unchanged) when xi clashes
  // at an endpoint of the last edge.
  void augment(std::span<const EdgeId> chain, Color xi);

  void set_checked(bool on) noexcept { checked_ = on; }
  bool checked() const noexcept { return checked_; }

  // Rebuilds the missing table from the edge colors and compares. O(nq + m).
  bool missing_table_consistent() const;

  friend bool operator==(const ColoringState& a, const ColoringState& b) {
    return a.graph_ == b.graph_ && a.q_ == b.q_ && a.colors_ == b.colors_ &&
           a.table_ == b.table_ && a.uncolored_ == b.uncolored_;
  }

 private:
  std::span<const EdgeId> row(VertexId x) const {
    return {table_.data() + static_cast<std::size_t>(x) * stride_, stride_};
  }
  EdgeId& slot(VertexId x, Color c) { return table_[static_cast<std::size_t>(x) * stride_ + c]; }

  void recolor(EdgeId e, Color c);

  const Graph* graph_;
  Color q_;
  std::size_t stride_;
  BigVector<Color> colors_;
  BigVector<EdgeId> table_;
  std::size_t uncolored_;
  std::uint64_t fingerprint_ = 0;
  bool checked_ = false;
};

// Throws Error{kNotShiftable} naming the first problem: a colored start
// edge, repeated or non-adjacent consecutive edges, out-of-range colors, or a
// clash in the shifted coloring. O(length) using the missing table.
void validate_shiftable(const ColoringState& state, std::span<const EdgeId> chain);

struct ProperReport {
  bool proper = true;
  // Pairs of adjacent edges sharing a color.
  std::vector<std::pair<EdgeId, EdgeId>> conflicts;
  // Edges whose color is above q.
  std::vector<EdgeId> out_of_range;
  std::size_t colored = 0;
};

// Exhaustive O(m + q) scan of the edge colors. Never reads a missing table,
// so it can serve as an oracle for ColoringState.
ProperReport verify_proper(const Graph& g, std::span<const Color> colors, Color q);
ProperReport verify_proper(const ColoringState& state);

}  // namespace fastec

#endif  // FASTEC_COLORING_STATE_HPP_
