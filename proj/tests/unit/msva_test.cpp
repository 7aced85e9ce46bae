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

#include <map>
#include <string>
#include <vector>

#include "fastec/errors.hpp"
#include "fastec/generate.hpp"
#include "fastec/vizing_engine.hpp"
#include "support/oracles.hpp"

namespace fastec {
namespace {

TEST(Msva, EmptyColoringSingleEdge) {
  const Graph g = Graph::build(2, std::vector<EdgePair>{{0, 1}});
  std::map<Color, int> counts;
  RngStream rng(17);
  for (int i = 0; i < 8000; ++i) {
    ColoringState s(g, 4);
    VizingEngine engine(s, rng, {.k_max = 8, .ell = 4, .checked = true});
    const MsvaOutcome out = engine.msva(0, 0);
    ASSERT_TRUE(out.chain.steps.empty());
    ASSERT_EQ(out.chain.edges(), EdgeChain{0});
    ASSERT_EQ(out.iterations, 1u);
    ++counts[out.final_color];
  }
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& [c, n] : counts) EXPECT_NEAR(n, 2000, 200) << "color " << c;
}

// x=0 y=1 a=2 b=3, q=4: xy blank, xa=1, xb=2, and an 8-edge 3/2 alternating
// path hanging off a through vertices 4..11. When the fan goes through a
// and picks gamma=3 the first candidate is capped at 2ell=8 and must be cut.
struct LongPath {
  Graph g;
  testing::Coloring phi;

  LongPath() {
    std::vector<EdgePair> edges{{0, 1}, {0, 2}, {0, 3}};
    phi = {kBlank, 1, 2};
    VertexId prev = 2;
    for (VertexId v = 4; v < 12; ++v) {
      edges.push_back({prev, v});
      phi.push_back(v % 2 == 0 ? 3 : 2);
      prev = v;
    }
    g = Graph::build(12, edges);
  }
};

TEST(Msva, LongFirstCandidateIsCut) {
  const LongPath lp;
  constexpr std::size_t kEll = 4;
  int cut_once = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    ColoringState s = testing::state_from(lp.g, 4, lp.phi);
    RngStream rng(seed);
    VizingEngine engine(s, rng, {.k_max = 8, .ell = kEll, .checked = true});
    std::vector<TraceEvent> events;
    engine.set_trace([&](const TraceEvent& ev) { events.push_back(ev); });
    const MsvaOutcome out = engine.msva(0, 0);
    ASSERT_FALSE(audit_outcome(lp.g, out, kEll)) << "seed " << seed;
    ASSERT_FALSE(events.empty());
    ASSERT_EQ(events.back().kind, TraceEvent::Kind::kSuccess);
    if (engine.counters().forward_iterations == 1 && out.backward_iterations == 0) {
      ++cut_once;
      ASSERT_EQ(out.chain.steps.size(), 1u);
      const std::size_t len = out.chain.steps[0].path.length();
      EXPECT_GE(len, kEll);
      EXPECT_LE(len, 2 * kEll - 1);
      EXPECT_EQ(out.chain.steps[0].full_path.length(), 2 * kEll);
    }
    testing::Coloring psi = lp.phi;
    for (const StepRecord& st : out.chain.steps) psi = testing::naive_shift(psi, st.edges());
    for (EdgeId e = 0; e < lp.g.num_edges(); ++e) ASSERT_EQ(s.color_of(e), psi[e]);
    s.augment(out.chain.tail.edges(), out.final_color);
    for (EdgeId e = 0; e < lp.g.num_edges(); ++e) psi[e] = s.color_of(e);
    ASSERT_TRUE(testing::naive_proper(lp.g, psi, 4));
    ASSERT_NE(psi[0], kBlank);
  }
  EXPECT_GT(cut_once, 5);
}

TEST(Msva, DenseRandomStatesProduceValidChains) {
  std::uint64_t forward = 0, backward = 0, zero_backward = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RngStream rng(seed);
    const Graph g = generate(NearRegular{150, 4 + seed % 5}, rng);
    const Color q = static_cast<Color>(g.max_degree() + 1);
    const testing::Coloring phi = testing::random_partial_coloring(g, q, 0.98, rng);
    ColoringState s = testing::state_from(g, q, phi);
    const std::size_t ell = 3 + seed % 3;
    VizingEngine engine(s, rng, {.k_max = 8, .ell = ell, .checked = true});
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (s.color_of(e) != kBlank) continue;
      const VertexId x = g.endpoints(e).first;
      const MsvaOutcome out = engine.msva(e, x);
      ASSERT_FALSE(audit_outcome(g, out, ell));
      ASSERT_TRUE(testing::naive_non_intersecting(out.chain));
      s.augment(out.chain.tail.edges(), out.final_color);
      ASSERT_NE(s.color_of(e), kBlank);
    }
    testing::Coloring psi(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) psi[e] = s.color_of(e);
    ASSERT_TRUE(testing::naive_proper(g, psi, q));
    forward += engine.counters().forward_iterations;
    backward += engine.counters().backward_iterations;
    zero_backward += engine.counters().zero_backward_iterations;
    EXPECT_LE(engine.counters().zero_backward_iterations, engine.counters().backward_iterations);
  }
  EXPECT_GT(forward, 0u);
  EXPECT_GT(backward, 0u);
  RecordProperty("zero_backward", static_cast<int>(zero_backward));
}

// On a 60-vertex graph with ell=3 this seed reaches a state where every cut
// of the first path leaves the next pivot inside the first fan, so the loop
// can only go back and forth. The watchdog turns that into an error.
TEST(Msva, WatchdogStopsLivelock) {
  const std::uint64_t seed = 288;
  RngStream rng(seed);
  const Graph g = generate(NearRegular{60, 4 + seed % 5}, rng);
  const Color q = static_cast<Color>(g.max_degree() + 1);
  const testing::Coloring phi = testing::random_partial_coloring(g, q, 0.98, rng);
  ColoringState s = testing::state_from(g, q, phi);
  VizingEngine engine(s, rng, {.k_max = 8, .ell = 3, .checked = false});
  try {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (s.color_of(e) != kBlank) continue;
      const MsvaOutcome out = engine.msva(e, g.endpoints(e).first);
      s.augment(out.chain.tail.edges(), out.final_color);
    }
    FAIL() << "expected the watchdog to fire";
  } catch (const Error& e) {
    EXPECT_TRUE(e.is_internal());
    EXPECT_NE(std::string(e.what()).find("MSVA watchdog"), std::string::npos);
  }
  EXPECT_GE(engine.counters().zero_backward_iterations, 400'000u);
}

TEST(Msva, RejectsColoredEdge) {
  const Graph g = Graph::build(3, std::vector<EdgePair>{{0, 1}, {1, 2}});
  ColoringState s = testing::state_from(g, 3, {1, kBlank});
  RngStream rng(1);
  VizingEngine engine(s, rng, {});
  EXPECT_THROW(engine.msva(0, 0), Error);
}

}  // namespace
}  // namespace fastec
