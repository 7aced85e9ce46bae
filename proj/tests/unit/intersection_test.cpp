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

#include <optional>
#include <utility>
#include <vector>

#include "fastec/rng.hpp"
#include "fastec/vizing_engine.hpp"

namespace fastec {
namespace {

// Fan pivot 0, leaves 1..3 via edges 0..2; path from leaf 3 through
// vertices 4, 5, 6 via edges 3, 4, 5 (start edge is fan edge 2).
struct Shape {
  Fan fan;
  PathChain path;

  Shape() {
    fan.pivot = 0;
    fan.leaves = {1, 2, 3};
    fan.edges = {0, 1, 2};
    path.start_edge = 2;
    path.start_vertex = 0;
    path.vertices = {3, 4, 5, 6};
    path.path_edges = {3, 4, 5};
    path.alpha = 1;
    path.beta = 2;
  }
};

TEST(VisitedMap, MarksAndReset) {
  VisitedMap m(10, 10);
  EXPECT_FALSE(m.vertex_step(3));
  m.mark_vertex(3, 2);
  m.mark_edge(7, 5);
  EXPECT_EQ(m.vertex_step(3), 2u);
  EXPECT_EQ(m.edge_step(7), 5u);
  EXPECT_FALSE(m.edge_step(3));
  m.unmark_edge(7);
  EXPECT_FALSE(m.edge_step(7));
  m.reset();
  EXPECT_FALSE(m.vertex_step(3));
  m.mark_vertex(3, 1);
  EXPECT_EQ(m.vertex_step(3), 1u);
}

TEST(FirstIntersection, NothingMarked) {
  VisitedMap m(10, 10);
  const Shape s;
  EXPECT_FALSE(first_intersection(m, s.fan, s.path));
}

TEST(FirstIntersection, PivotComesFirst) {
  VisitedMap m(10, 10);
  const Shape s;
  m.mark_vertex(0, 0);
  m.mark_edge(3, 0);
  const auto hit = first_intersection(m, s.fan, s.path);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->step, 0u);
  EXPECT_EQ(hit->kind, Intersection::Kind::kVertex);
  EXPECT_EQ(hit->id, 0u);
  EXPECT_EQ(hit->position, 0u);
}

TEST(FirstIntersection, ScanOrderBeatsStepIndex) {
  VisitedMap m(10, 10);
  const Shape s;
  m.mark_vertex(2, 3);  // leaf, step 3
  m.mark_edge(4, 1);    // path edge, step 1
  const auto hit = first_intersection(m, s.fan, s.path);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->step, 3u);
  EXPECT_EQ(hit->id, 2u);
}

TEST(FirstIntersection, LeafBeforeItsEdgeAndEdgeBeforeFarVertex) {
  const Shape s;
  {
    VisitedMap m(10, 10);
    m.mark_edge(1, 4);
    m.mark_vertex(2, 5);
    const auto hit = first_intersection(m, s.fan, s.path);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->kind, Intersection::Kind::kVertex);
    EXPECT_EQ(hit->step, 5u);
  }
  {
    VisitedMap m(10, 10);
    m.mark_edge(4, 4);
    m.mark_vertex(5, 5);
    const auto hit = first_intersection(m, s.fan, s.path);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->kind, Intersection::Kind::kEdge);
    EXPECT_EQ(hit->step, 4u);
  }
}

TEST(FirstIntersection, MatchesBruteForce) {
  const Shape s;
  // Scan order written out by hand.
  const std::vector<std::pair<bool, std::uint32_t>> order{
      {true, 0}, {true, 1}, {false, 0}, {true, 2}, {false, 1}, {true, 3}, {false, 2},
      {false, 3}, {true, 4}, {false, 4}, {true, 5}, {false, 5}, {true, 6}};
  RngStream rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    VisitedMap m(10, 10);
    std::vector<std::optional<std::size_t>> vstep(10), estep(10);
    for (std::uint32_t i = 0; i < 7; ++i) {
      if (rng.uniform_below(6) == 0) {
        vstep[i] = rng.uniform_below(5);
        m.mark_vertex(i, *vstep[i]);
      }
      if (i < 6 && rng.uniform_below(6) == 0) {
        estep[i] = rng.uniform_below(5);
        m.mark_edge(i, *estep[i]);
      }
    }
    std::optional<std::size_t> expected_pos, expected_step;
    for (std::size_t p = 0; p < order.size() && !expected_pos; ++p) {
      const auto& [is_vertex, id] = order[p];
      const auto& tag = is_vertex ? vstep[id] : estep[id];
      if (tag) {
        expected_pos = p;
        expected_step = *tag;
      }
    }
    const auto hit = first_intersection(m, s.fan, s.path);
    ASSERT_EQ(hit.has_value(), expected_pos.has_value());
    if (hit) {
      EXPECT_EQ(hit->position, *expected_pos);
      EXPECT_EQ(hit->step, *expected_step);
    }
  }
}

}  // namespace
}  // namespace fastec
