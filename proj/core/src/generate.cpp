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

#include "fastec/generate.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "fastec/errors.hpp"

namespace fastec {

namespace {

constexpr int kPairingAttempts = 32;
constexpr int kRepairRounds = 64;

std::uint64_t pair_key(VertexId u, VertexId v) {
  return (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::kPreconditionViolated, what);
}

// One pairing attempt. Returns false if some vertex would lose two or more
// stubs to rejection.
bool try_near_regular(std::size_t n, std::size_t d, RandomSource& rng,
                      std::vector<EdgePair>& edges) {
  edges.clear();
  std::vector<VertexId> stubs;
  stubs.reserve(n * d);
  for (std::size_t v = 0; v < n; ++v) {
    stubs.insert(stubs.end(), d, static_cast<VertexId>(v));
  }
  std::unordered_set<std::uint64_t> present;
  present.reserve(n * d);

  std::vector<VertexId> leftover;
  for (int round = 0; round < kRepairRounds && stubs.size() >= 2; ++round) {
    shuffle(std::span<VertexId>(stubs), rng);
    leftover.clear();
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const VertexId a = stubs[i];
      const VertexId b = stubs[i + 1];
      if (a != b && present.insert(pair_key(a, b)).second) {
        edges.emplace_back(a, b);
      } else {
        leftover.push_back(a);
        leftover.push_back(b);
      }
    }
    if (stubs.size() % 2 == 1) leftover.push_back(stubs.back());
    if (leftover.size() == stubs.size()) break;  // no progress this round
    stubs.swap(leftover);
  }
  if (stubs.size() < 2) stubs.clear();

  std::vector<std::uint8_t> deficit(n, 0);
  for (VertexId v : stubs) {
    if (++deficit[v] > 1) return false;
  }
  return true;
}

Graph near_regular(const NearRegular& p, RandomSource& rng) {
  require(p.degree < p.n || (p.n == 0 && p.degree == 0), "near_regular needs degree < n");
  require((p.n * p.degree) % 2 == 0, "near_regular needs n*degree even");
  std::vector<EdgePair> edges;
  for (int attempt = 0; attempt < kPairingAttempts; ++attempt) {
    if (try_near_regular(p.n, p.degree, rng, edges)) {
      return Graph::build(p.n, edges);
    }
  }
  throw Error(Errc::kInfeasible, "near_regular pairing budget exhausted; retry with another seed");
}

Graph erdos_renyi_m(const ErdosRenyiM& p, RandomSource& rng) {
  const std::size_t max_edges = p.n < 2 ? 0 : p.n * (p.n - 1) / 2;
  require(p.edges <= max_edges, "erdos_renyi_m needs m <= n(n-1)/2");
  std::vector<EdgePair> edges;
  edges.reserve(p.edges);
  std::unordered_set<std::uint64_t> present;
  present.reserve(p.edges * 2);
  while (edges.size() < p.edges) {
    const auto u = static_cast<VertexId>(rng.uniform_below(p.n));
    const auto v = static_cast<VertexId>(rng.uniform_below(p.n));
    if (u == v || !present.insert(pair_key(u, v)).second) continue;
    edges.emplace_back(u, v);
  }
  return Graph::build(p.n, edges);
}

Graph complete_bipartite(const CompleteBipartite& p) {
  std::vector<EdgePair> edges;
  edges.reserve(p.left * p.right);
  for (std::size_t a = 0; a < p.left; ++a) {
    for (std::size_t b = 0; b < p.right; ++b) {
      edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(p.left + b));
    }
  }
  return Graph::build(p.left + p.right, edges);
}

Graph cycle(const Cycle& p) {
  require(p.n >= 3, "cycle needs n >= 3");
  std::vector<EdgePair> edges;
  edges.reserve(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % p.n));
  }
  return Graph::build(p.n, edges);
}

Graph star(const Star& p) {
  std::vector<EdgePair> edges;
  edges.reserve(p.leaves);
  for (std::size_t i = 1; i <= p.leaves; ++i) {
    edges.emplace_back(0, static_cast<VertexId>(i));
  }
  return Graph::build(p.leaves + 1, edges);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Graph generate(const GraphFamily& family, RandomSource& rng) {
  return std::visit(Overloaded{
                        [&](const NearRegular& p) { return near_regular(p, rng); },
                        [&](const ErdosRenyiM& p) { return erdos_renyi_m(p, rng); },
                        [](const CompleteBipartite& p) { return complete_bipartite(p); },
                        [](const Cycle& p) { return cycle(p); },
                        [](const Star& p) { return star(p); },
                    },
                    family);
}

std::string describe(const GraphFamily& family) {
  return std::visit(
      Overloaded{
          [](const NearRegular& p) {
            return "near_regular(n=" + std::to_string(p.n) + ",d=" + std::to_string(p.degree) + ")";
          },
          [](const ErdosRenyiM& p) {
            return "erdos_renyi_m(n=" + std::to_string(p.n) + ",m=" + std::to_string(p.edges) + ")";
          },
          [](const CompleteBipartite& p) {
            return "complete_bipartite(" + std::to_string(p.left) + "," + std::to_string(p.right) +
                   ")";
          },
          [](const Cycle& p) { return "cycle(" + std::to_string(p.n) + ")"; },
          [](const Star& p) { return "star(" + std::to_string(p.leaves) + ")"; },
      },
      family);
}

}  // namespace fastec
