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

#include <vector>

#include "fastec/coloring_state.hpp"
#include "fastec/errors.hpp"
#include "fastec/generate.hpp"
#include "support/oracles.hpp"

namespace fastec {
namespace {

using testing::Coloring;

Graph build(std::size_t n, std::vector<EdgePair> edges) { return Graph::build(n, edges); }

void expect_code(Errc code, const auto& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(ColoringState, EmptyStateOnPath) {
  const Graph g = build(3, {{0, 1}, {1, 2}});
  const ColoringState s(g, 4);
  EXPECT_EQ(s.uncolored_count(), 2u);
  for (VertexId x = 0; x < 3; ++x) {
    for (Color c = 1; c <= 4; ++c) EXPECT_TRUE(s.is_missing(x, c));
  }
  EXPECT_TRUE(s.missing_table_consistent());
}

TEST(ColoringState, RejectsQAtMostMaxDegree) {
  const Graph star = build(4, {{0, 1}, {0, 2}, {0, 3}});
  expect_code(Errc::kQTooSmall, [&] { ColoringState(star, 3); });
  EXPECT_NO_THROW(ColoringState(star, 4));
}

TEST(ColoringState, CompleteBipartiteAllBlank) {
  const Graph g = build(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  const ColoringState s(g, 6);
  EXPECT_EQ(s.uncolored_count(), 6u);
  for (Color c : s.edge_colors()) EXPECT_EQ(c, kBlank);
}

TEST(ColoringState, PartnerAfterColoring) {
  const Graph g = build(3, {{0, 1}, {1, 2}});
  ColoringState s(g, 4);
  const EdgeId e0[] = {0};
  s.augment(e0, 3);
  EXPECT_EQ(s.missing_partner(0, 3), 1u);
  EXPECT_EQ(s.missing_partner(1, 3), 0u);
  EXPECT_EQ(s.missing_partner(2, 3), kNoVertex);
  EXPECT_EQ(s.edge_with_color(1, 3), 0u);
  EXPECT_FALSE(s.is_missing(1, 3));
  EXPECT_EQ(s.uncolored_count(), 1u);
}

TEST(ColoringState, OneSwapShift) {
  const Graph g = build(3, {{0, 1}, {1, 2}});
  ColoringState s(g, 6);
  const EdgeId e1[] = {1};
  s.augment(e1, 5);
  const EdgeId chain[] = {0, 1};
  s.shift(chain);
  EXPECT_EQ(s.color_of(0), 5u);
  EXPECT_EQ(s.color_of(1), kBlank);
  EXPECT_EQ(s.missing_partner(0, 5), 1u);
  EXPECT_TRUE(s.is_missing(2, 5));
  EXPECT_TRUE(s.missing_table_consistent());
}

TEST(ColoringState, SevenEdgeChainShiftsEveryColorBack) {
  // Path of 7 edges, first blank, the rest carrying six distinct colors.
  std::vector<EdgePair> edges;
  for (VertexId v = 0; v < 7; ++v) edges.push_back({v, v + 1});
  const Graph g = Graph::build(8, edges);
  ColoringState s(g, 7);
  for (EdgeId e = 1; e < 7; ++e) {
    const EdgeId one[] = {e};
    s.augment(one, e);
  }
  const EdgeId chain[] = {0, 1, 2, 3, 4, 5, 6};
  s.shift(chain);
  for (EdgeId e = 0; e < 6; ++e) EXPECT_EQ(s.color_of(e), e + 1);
  EXPECT_EQ(s.color_of(6), kBlank);
  EXPECT_TRUE(s.missing_table_consistent());
  EXPECT_EQ(s.uncolored_count(), 1u);
}

TEST(ColoringState, AugmentSingleHappyEdge) {
  const Graph g = build(2, {{0, 1}});
  ColoringState s(g, 3);
  const EdgeId e[] = {0};
  s.augment(e, 2);
  EXPECT_EQ(s.color_of(0), 2u);
  EXPECT_TRUE(s.complete());
}

TEST(ColoringState, AugmentWithClashRestoresState) {
  // Fan-like chain around vertex 1: edges (0,1) blank, (1,2) colored 1.
  const Graph g = build(4, {{0, 1}, {1, 2}, {2, 3}});
  ColoringState s(g, 3);
  const EdgeId a[] = {1};
  s.augment(a, 1);
  const EdgeId b[] = {2};
  s.augment(b, 2);
  const ColoringState before = s;
  const EdgeId chain[] = {0, 1};
  // After the shift (1,2) is blank; color 2 is used at 2 by (2,3).
  expect_code(Errc::kInvalidFinalColor, [&] { s.augment(chain, 2); });
  EXPECT_TRUE(s == before);
  expect_code(Errc::kInvalidFinalColor, [&] { s.augment(chain, 0); });
  expect_code(Errc::kInvalidFinalColor, [&] { s.augment(chain, 4); });
  EXPECT_TRUE(s == before);
  s.augment(chain, 3);
  EXPECT_EQ(s.color_of(0), 1u);
  EXPECT_EQ(s.color_of(1), 3u);
  EXPECT_TRUE(verify_proper(s).proper);
}

TEST(ColoringState, AugmentColoredSingleEdgeRejected) {
  const Graph g = build(2, {{0, 1}});
  ColoringState s(g, 3);
  const EdgeId e[] = {0};
  s.augment(e, 1);
  expect_code(Errc::kNotShiftable, [&] { s.augment(e, 2); });
}

TEST(ValidateShiftable, NamesProblems) {
  const Graph g = build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  ColoringState s(g, 3);
  for (auto [e, c] : {std::pair<EdgeId, Color>{1, 1}, {2, 2}, {3, 1}}) {
    const EdgeId one[] = {e};
    s.augment(one, c);
  }
  const EdgeId colored_start[] = {1, 2};
  expect_code(Errc::kNotShiftable, [&] { validate_shiftable(s, colored_start); });
  const EdgeId repeated[] = {0, 1, 0};
  expect_code(Errc::kNotShiftable, [&] { validate_shiftable(s, repeated); });
  const EdgeId gap[] = {0, 2};
  expect_code(Errc::kNotShiftable, [&] { validate_shiftable(s, gap); });
  // (0,1)=1, (1,2)=2, (2,3)=blank.
  const EdgeId ok[] = {0, 1, 2};
  EXPECT_NO_THROW(validate_shiftable(s, ok));
  // (0,1)=1, (1,2)=blank.
  const EdgeId ok2[] = {0, 1};
  EXPECT_NO_THROW(validate_shiftable(s, ok2));
}

TEST(ValidateShiftable, DetectsClashWithOutsideEdge) {
  // Star center 0 with leaves 1..3 and a pendant (1,4).
  const Graph g = build(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  ColoringState s(g, 4);
  const EdgeId a[] = {1};
  s.augment(a, 1);  // (0,2)=1
  const EdgeId b[] = {3};
  s.augment(b, 1);  // (1,4)=1
  const EdgeId chain[] = {0, 1};  // (0,1) would take 1, clashing with (1,4)
  expect_code(Errc::kNotShiftable, [&] { validate_shiftable(s, chain); });
  s.set_checked(true);
  expect_code(Errc::kNotShiftable, [&] { s.shift(chain); });
}

TEST(VerifyProper, ReportsConflictsAndRange) {
  const Graph g = build(3, {{0, 1}, {1, 2}});
  const std::vector<Color> bad{1, 1};
  const ProperReport r = verify_proper(g, bad, 3);
  EXPECT_FALSE(r.proper);
  ASSERT_EQ(r.conflicts.size(), 1u);
  EXPECT_EQ(r.conflicts[0], (std::pair<EdgeId, EdgeId>{0, 1}));
  const ProperReport range = verify_proper(g, std::vector<Color>{4, 1}, 3);
  EXPECT_FALSE(range.proper);
  EXPECT_EQ(range.out_of_range, std::vector<EdgeId>{0});
  const ProperReport empty = verify_proper(g, std::vector<Color>{0, 0}, 3);
  EXPECT_TRUE(empty.proper);
  EXPECT_EQ(empty.colored, 0u);
}

TEST(VerifyProper, AgreesWithPairwiseOracle) {
  RngStream rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = generate(ErdosRenyiM{8, 12}, rng);
    const Color q = static_cast<Color>(g.max_degree() + 1);
    Coloring phi(g.num_edges());
    for (auto& c : phi) c = static_cast<Color>(rng.uniform_below(q + 2));
    const ProperReport r = verify_proper(g, phi, q);
    EXPECT_EQ(r.proper, testing::naive_proper(g, phi, q));
  }
}

TEST(ColoringState, MissingCountMatchesColoredDegree) {
  RngStream rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = generate(NearRegular{60, 5}, rng);
    const Color q = 7;
    const Coloring phi = testing::random_partial_coloring(g, q, 0.7, rng);
    const ColoringState s = testing::state_from(g, q, phi);
    for (VertexId x = 0; x < g.num_vertices(); ++x) {
      std::size_t colored_degree = 0;
      for (const auto& inc : g.incident(x)) colored_degree += phi[inc.edge] != kBlank;
      std::size_t missing = 0;
      for (Color c = 1; c <= q; ++c) {
        missing += s.is_missing(x, c);
        EXPECT_EQ(s.is_missing(x, c), testing::naive_missing(g, phi, x, c));
      }
      EXPECT_EQ(missing, q - colored_degree);
    }
  }
}

TEST(ColoringState, FingerprintTracksColoring) {
  const Graph g = build(3, {{0, 1}, {1, 2}});
  ColoringState a(g, 4), b(g, 4);
  EXPECT_EQ(a.fingerprint(), b.fingerprint());
  const EdgeId e0[] = {0};
  a.augment(e0, 2);
  EXPECT_NE(a.fingerprint(), b.fingerprint());
  b.augment(e0, 2);
  EXPECT_EQ(a.fingerprint(), b.fingerprint());
}

}  // namespace
}  // namespace fastec
