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

#ifndef FASTEC_ALTERNATING_PATH_HPP_
#define FASTEC_ALTERNATING_PATH_HPP_

#include <cstddef>
#include <optional>

#include "fastec/chain.hpp"
#include "fastec/coloring_state.hpp"

namespace fastec {

// Number of edges at v colored alpha or beta: 0, 1 or 2.
int degree_ab(const ColoringState& state, VertexId v, Color alpha, Color beta);

// Walks the maximal alpha/beta path leaving `from` (whose first edge is
// colored alpha) and prepends `start_edge`, stopping once the chain has
// `cap` edges. `from` must be an endpoint of the blank `start_edge` with at
// most one alpha/beta edge, otherwise Error{kBadStart}. Read-only; runs in
// O(min(path length, cap)).
PathChain walk_alternating_path(const ColoringState& state, EdgeId start_edge, VertexId from,
                                Color alpha, Color beta, std::size_t cap);

// Smallest color missing at both endpoints of a blank edge. O(q).
std::optional<Color> happy_color(const ColoringState& state, EdgeId e);

// Both endpoints of the blank edge have alpha/beta-degree below 2.
bool is_hopeful_edge(const ColoringState& state, EdgeId e, Color alpha, Color beta);

// x and y lie on the same component of the alpha/beta subgraph. Walks the
// component, so O(component size); meant for assertions and tests.
bool are_related(const ColoringState& state, VertexId x, VertexId y, Color alpha, Color beta);

// Hopeful, and the endpoints are not related.
bool is_successful_edge(const ColoringState& state, EdgeId e, Color alpha, Color beta);

}  // namespace fastec

#endif  // FASTEC_ALTERNATING_PATH_HPP_
