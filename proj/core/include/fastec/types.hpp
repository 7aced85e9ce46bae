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

#ifndef FASTEC_TYPES_HPP_
#define FASTEC_TYPES_HPP_

#include <cstdint>
#include <limits>

namespace fastec {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Colors are 1..q; 0 is the blank (uncolored) sentinel.
using Color = std::uint32_t;

inline constexpr Color kBlank = 0;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

}  // namespace fastec

#endif  // FASTEC_TYPES_HPP_
