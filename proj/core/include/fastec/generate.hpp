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

#ifndef FASTEC_GENERATE_HPP_
#define FASTEC_GENERATE_HPP_

#include <cstddef>
#include <string>
#include <variant>

#include "fastec/graph.hpp"
#include "fastec/rng.hpp"

namespace fastec {

// Configuration-model pairing with loops and repeated pairs rejected.
// Every vertex ends with degree d or d-1.
struct NearRegular {
  std::size_t n;
  std::size_t degree;
};

// m distinct uniformly random pairs.
struct ErdosRenyiM {
  std::size_t n;
  std::size_t edges;
};

struct CompleteBipartite {
  std::size_t left;
  std::size_t right;
};

struct Cycle {
  std::size_t n;
};

// Center 0 with leaves 1..leaves.
struct Star {
  std::size_t leaves;
};

using GraphFamily = std::variant<NearRegular, ErdosRenyiM, CompleteBipartite, Cycle, Star>;

// Throws Error{kPreconditionViolated} for inadmissible parameters and
// Error{kInfeasible} if pairing keeps failing.
Graph generate(const GraphFamily& family, RandomSource& rng);

std::string describe(const GraphFamily& family);

}  // namespace fastec

#endif  // FASTEC_GENERATE_HPP_
