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

#include <gtest/gtest.h>

#include "fastec/alternating_path.hpp"
#include "fastec/errors.hpp"
#include "fastec/generate.hpp"
#include "support/oracles.hpp"

namespace fastec {
namespace {

using testing::Coloring;

ColoringState colored(const Graph& g, Color q, const Coloring& phi) {
  return testing::state_from(g, q, phi);
}

Graph path_graph(std::size_t edges) {
  std::vector<EdgePair> e;
  for (VertexId v = 0; v < edges; ++v) e.push_back({v, v + 1});
  return Graph::build(edges + 1, e);
}

TEST(Walker, ShortPath) {
  const Graph g = path_graph(3);
  const ColoringState s = colored(g, 3, {kBlank, 1, 2});
  const PathChain p = walk_alternating_path(s, 0, 1, 1, 2, 10);
  EXPECT_EQ(p.edges(), (EdgeChain{0, 1, 2}));
  EXPECT_EQ(p.v_end(), 3u);
  EXPECT_EQ(p.v_start(), 0u);
  EXPECT_FALSE(p.reached_cap);
  EXPECT_EQ(p.alpha, 1u);
  EXPECT_EQ(p.beta, 2u);
}

TEST(Walker, IsolatedInSubgraph) {
  const Graph g = path_graph(2);
  const ColoringState s = colored(g, 4, {kBlank, 3});
  const PathChain p = walk_alternating_path(s, 0, 1, 1, 2, 10);
  EXPECT_EQ(p.length(), 1u);
  EXPECT_EQ(p.v_end(), 1u);
}

TEST(Walker, CapOnLongPath) {
  const Graph g = path_graph(101);
  Coloring phi(101);
  phi[0] = kBlank;
  for (EdgeId e = 1; e < 101; ++e) phi[e] = e % 2 == 1 ? 1 : 2;
  const ColoringState s = colored(g, 3, phi);
  const PathChain p = walk_alternating_path(s, 0, 1, 1, 2, 6);
  EXPECT_EQ(p.length(), 6u);
  EXPECT_TRUE(p.reached_cap);
  EXPECT_EQ(p.v_end(), 6u);
  const PathChain full = walk_alternating_path(s, 0, 1, 1, 2, 1000);
  EXPECT_EQ(full.length(), 101u);
  EXPECT_FALSE(full.reached_cap);
}

TEST(Walker, BadStarts) {
  const Graph g = path_graph(3);
  const ColoringState s = colored(g, 3, {kBlank, 1, 2});
  auto code = [&](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kInternal;
  };
  EXPECT_EQ(code([&] { walk_alternating_path(s, 0, 2, 1, 2, 5); }), Errc::kBadStart);  // not on edge
  EXPECT_EQ(code([&] { walk_alternating_path(s, 1, 2, 2, 1, 5); }), Errc::kBadStart);  // colored
  EXPECT_EQ(code([&] { walk_alternating_path(s, 0, 1, 1, 1, 5); }), Errc::kBadStart);  // same colors
  EXPECT_EQ(code([&] { walk_alternating_path(s, 0, 1, 1, 2, 0); }), Errc::kBadStart);  // cap 0
}

TEST(Walker, MatchesNaiveWalkOnRandomStates) {
  RngStream rng(31);
  int walks = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = generate(NearRegular{40, 4}, rng);
    const Color q = 6;
    const Coloring phi = testing::random_partial_coloring(g, q, 0.9, rng);
    const ColoringState s = colored(g, q, phi);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (phi[e] != kBlank) continue;
      const auto [a, b] = g.endpoints(e);
      const VertexId from = rng.uniform_below(2) ? a : b;
      const auto alpha = static_cast<Color>(1 + rng.uniform_below(q));
      auto beta = static_cast<Color>(1 + rng.uniform_below(q - 1));
      if (beta >= alpha) ++beta;
      if (degree_ab(s, from, alpha, beta) == 2) continue;
      const std::size_t cap = 1 + rng.uniform_below(12);
      const PathChain p = walk_alternating_path(s, e, from, alpha, beta, cap);
      ++walks;
      // Naive replay.
      VertexId v = from;
      Color want = alpha;
      std::vector<EdgeId> expect;
      while (expect.size() + 1 < cap) {
        const EdgeId f = testing::naive_edge_with_color(g, phi, v, want);
        if (f == kNoEdge) break;
        expect.push_back(f);
        v = g.other_end(f, v);
        want = want == alpha ? beta : alpha;
      }
      ASSERT_EQ(p.path_edges, expect);
      ASSERT_EQ(p.v_end(), v);
      ASSERT_EQ(p.reached_cap, p.length() == cap);
      if (p.length() < cap) ASSERT_LE(degree_ab(s, p.v_end(), alpha, beta), 1);
    }
  }
  EXPECT_GT(walks, 500);
}

TEST(DegreeAb, Counts) {
  const Graph g = Graph::build(3, std::vector<EdgePair>{{0, 1}, {0, 2}});
  ColoringState s(g, 4);
  EXPECT_EQ(degree_ab(s, 0, 1, 2), 0);
  const EdgeId a[] = {0};
  s.augment(a, 1);
  EXPECT_EQ(degree_ab(s, 0, 1, 2), 1);
  const EdgeId b[] = {1};
  s.augment(b, 2);
  EXPECT_EQ(degree_ab(s, 0, 1, 2), 2);
}

TEST(HappyColor, Cases) {
  // Edge (0,1) blank; vertex 0 has other edges colored 1,3; vertex 1 has 1,2.
  const Graph g = Graph::build(5, std::vector<EdgePair>{{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  ColoringState empty(g, 4);
  EXPECT_EQ(happy_color(empty, 0), std::optional<Color>(1));
  const ColoringState s = colored(g, 4, {kBlank, 1, 3, 2});
  // M(0) = {2,4}, M(1) = {1,3,4}.
  EXPECT_EQ(happy_color(s, 0), std::optional<Color>(4));
  const Graph h = Graph::build(6, std::vector<EdgePair>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  const ColoringState none = colored(h, 4, {kBlank, 1, 2, 4, 3});
  // M(0) = {3,4}, M(1) = {1,2}.
  EXPECT_EQ(happy_color(none, 0), std::nullopt);
}

TEST(HappyColor, MatchesSetIntersection) {
  RngStream rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = generate(ErdosRenyiM{12, 25}, rng);
    const auto q = static_cast<Color>(g.max_degree() + 1);
    const Coloring phi = testing::random_partial_coloring(g, q, 0.8, rng);
    const ColoringState s = colored(g, q, phi);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (phi[e] != kBlank) continue;
      const auto [a, b] = g.endpoints(e);
      std::optional<Color> expect;
      for (Color c : testing::naive_missing_set(g, phi, q, a)) {
        if (testing::naive_missing(g, phi, b, c)) {
          expect = c;
          break;
        }
      }
      EXPECT_EQ(happy_color(s, e), expect);
    }
  }
}

TEST(EdgePredicates, HopefulRelatedSuccessful) {
  // Path 0-1-2-3 with (0,1) blank, (1,2)=1, (2,3)=2 and extra blank (3,0).
  const Graph g = Graph::build(4, std::vector<EdgePair>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const ColoringState s = colored(g, 3, {kBlank, 1, 2, kBlank});
  // Edge (0,1): deg_12(0)=0, deg_12(1)=1 → hopeful; 0 and 1 unrelated.
  EXPECT_TRUE(is_hopeful_edge(s, 0, 1, 2));
  EXPECT_FALSE(are_related(s, 0, 1, 1, 2));
  EXPECT_TRUE(is_successful_edge(s, 0, 1, 2));
  // Edge (3,0): 3 is the far end of the 1-2 path from 1, so 1 and 3 related.
  EXPECT_TRUE(are_related(s, 1, 3, 1, 2));
  EXPECT_TRUE(is_hopeful_edge(s, 3, 1, 2));
  EXPECT_TRUE(is_successful_edge(s, 3, 1, 2));  // 3 and 0 unrelated
}

}  // namespace
}  // namespace fastec
