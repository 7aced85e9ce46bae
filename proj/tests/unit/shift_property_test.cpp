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

#include "fastec/chain.hpp"
#include "fastec/coloring_state.hpp"
#include "fastec/errors.hpp"
#include "fastec/generate.hpp"
#include "support/oracles.hpp"

namespace fastec {
namespace {

using testing::Coloring;

struct Instance {
  Graph g;
  Color q;
  Coloring phi;
};

Instance random_instance(RandomSource& rng) {
  const std::size_t n = 2 * (4 + rng.uniform_below(13));
  const std::size_t d = 2 + rng.uniform_below(5);
  Graph g = generate(NearRegular{n, std::min(d, n - 1)}, rng);
  const auto q = static_cast<Color>(g.max_degree() + 1 + rng.uniform_below(3));
  Coloring phi = testing::random_partial_coloring(g, q, 0.6 + 0.4 * (rng.uniform_below(100) / 100.0), rng);
  return {std::move(g), q, std::move(phi)};
}

// Shift against the vector oracle, then shift back.
TEST(ShiftProperty, MatchesOracleAndReverseRestores) {
  RngStream rng(101);
  int checked = 0;
  while (checked < 1000) {
    const Instance inst = random_instance(rng);
    const auto chain = testing::random_shiftable_chain(inst.g, inst.phi, inst.q, 12, rng);
    if (!chain) continue;
    ++checked;
    ColoringState s = testing::state_from(inst.g, inst.q, inst.phi);
    s.set_checked(true);
    const ColoringState before = s;
    ASSERT_NO_THROW(validate_shiftable(s, *chain));
    s.shift(*chain);
    const Coloring expect = testing::naive_shift(inst.phi, *chain);
    ASSERT_TRUE(std::equal(expect.begin(), expect.end(), s.edge_colors().begin()));
    ASSERT_TRUE(s.missing_table_consistent());
    ASSERT_TRUE(testing::naive_proper(inst.g, expect, inst.q));
    // Bookkeeping: Start(C) becomes colored, End(C) blank.
    if (chain->size() > 1) EXPECT_EQ(s.color_of(chain->back()), kBlank);
    s.shift(reversed(*chain));
    ASSERT_TRUE(s == before);
    ASSERT_EQ(s.fingerprint(), before.fingerprint());
  }
}

TEST(ShiftProperty, CompositionSplitsAtAnyEdge) {
  RngStream rng(202);
  int checked = 0;
  while (checked < 1000) {
    const Instance inst = random_instance(rng);
    const auto chain = testing::random_shiftable_chain(inst.g, inst.phi, inst.q, 12, rng);
    if (!chain || chain->size() < 2) continue;
    ++checked;
    const std::size_t split = 1 + rng.uniform_below(chain->size());  // C1 = C|split
    const EdgeChain c1 = initial_segment(*chain, split);
    const EdgeChain c2(chain->begin() + static_cast<std::ptrdiff_t>(split - 1), chain->end());
    ASSERT_EQ(concat(c1, c2), *chain);

    ColoringState whole = testing::state_from(inst.g, inst.q, inst.phi);
    ColoringState parts = whole;
    whole.shift(*chain);
    parts.shift(c1);
    parts.shift(c2);
    ASSERT_TRUE(whole == parts);
  }
}

TEST(ShiftProperty, NonShiftableChainsRejectedInCheckedMode) {
  RngStream rng(303);
  int rejected = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Instance inst = random_instance(rng);
    // Random walk of edges without the shiftability filter.
    EdgeChain chain{static_cast<EdgeId>(rng.uniform_below(inst.g.num_edges()))};
    for (int step = 0; step < 4; ++step) {
      const auto [a, b] = inst.g.endpoints(chain.back());
      const auto inc = inst.g.incident(rng.uniform_below(2) ? a : b);
      chain.push_back(inc[rng.uniform_below(inc.size())].edge);
    }
    ColoringState s = testing::state_from(inst.g, inst.q, inst.phi);
    const bool oracle = testing::naive_shiftable(inst.g, inst.phi, inst.q, chain);
    bool accepted = true;
    try {
      validate_shiftable(s, chain);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kNotShiftable);
      accepted = false;
    }
    ASSERT_EQ(accepted, oracle) << "trial " << trial;
    rejected += !accepted;
  }
  EXPECT_GT(rejected, 50);
}

}  // namespace
}  // namespace fastec
