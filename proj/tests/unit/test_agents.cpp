//------------------------------------------------------------------------------
//
//   Copyright 2026 The gridauction Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------


#include "gridauction/agents.hpp"

#include <gtest/gtest.h>

#include <map>

namespace {

using namespace gridauction;

AgentState need_at(std::size_t slot, double kwh, double alpha, std::size_t slots = 24)
{
  std::vector<double> demand(slots, 0.0);
  demand[slot] = kwh;
  return AgentState(0, "c0", LoadVector(demand), alpha);
}

ReservePriceVector ramp(std::size_t slots = 24)
{
  ReservePriceVector p(slots);
  for (std::size_t t = 0; t < slots; ++t)
  {
    p[t] = 0.5 + 0.1 * static_cast<double>(t);
  }
  return p;
}

TEST(AgentsTest, ValuationFrequencies)
{
  for (auto kind : {ValuationKind::US, ValuationKind::Uniform})
  {
    ValuationDistribution const dist(kind);
    std::mt19937_64             rng(42);
    std::map<double, int>       seen;
    int const                   draws = 100000;
    for (int i = 0; i < draws; ++i)
    {
      ++seen[sample_alpha(dist, rng)];
    }
    ASSERT_EQ(seen.size(), dist.support().size());
    for (std::size_t k = 0; k < dist.support().size(); ++k)
    {
      double const freq = static_cast<double>(seen[dist.support()[k]]) / draws;
      EXPECT_NEAR(freq, dist.probabilities()[k], 0.01) << to_string(kind) << " alpha "
                                                        << dist.support()[k];
    }
  }
  EXPECT_EQ(ValuationDistribution(ValuationKind::US).support(),
            (std::vector<double>{1.0, 1.3, 1.5, 1.6, 1.9}));
  EXPECT_DOUBLE_EQ(ValuationDistribution(ValuationKind::Uniform).support().back(), 1.9);
}

TEST(AgentsTest, SamplingIsDeterministic)
{
  ValuationDistribution const dist(ValuationKind::Uniform);
  std::mt19937_64             a(9);
  std::mt19937_64             b(9);
  for (int i = 0; i < 1000; ++i)
  {
    ASSERT_EQ(sample_alpha(dist, a), sample_alpha(dist, b));
  }
}

TEST(AgentsTest, ParseValuationKind)
{
  EXPECT_EQ(parse_valuation_kind("us"), ValuationKind::US);
  EXPECT_EQ(parse_valuation_kind("uniform"), ValuationKind::Uniform);
  EXPECT_THROW(parse_valuation_kind("gaussian"), ConfigError);
  EXPECT_THROW(AgentState(0, "x", LoadVector{1.0, 1.0}, 0.9), std::invalid_argument);
}

TEST(AgentsTest, BidsOwnSlotWhenSupplyCovers)
{
  auto const          agent = need_at(18, 2.0, 1.5);
  std::vector<double> supply(24, 0.0);
  supply[18]       = 5.0;
  auto const p     = ramp();
  auto const bids  = make_bids(agent, supply, p);
  ASSERT_EQ(bids.size(), 1u);
  EXPECT_EQ(bids[0].slot, 18u);
  EXPECT_DOUBLE_EQ(bids[0].bid.quantity, 2.0);
  EXPECT_EQ(bids[0].bid.valuation, 1.5 * p[18]);
}

TEST(AgentsTest, LaterSlotWinsDistanceTie)
{
  auto const          agent = need_at(18, 2.0, 1.0);
  std::vector<double> supply(24, 0.0);
  supply[17] = supply[19] = 3.0;
  auto const p    = ramp();
  auto const bids = make_bids(agent, supply, p);
  ASSERT_EQ(bids.size(), 1u);
  EXPECT_EQ(bids[0].slot, 19u);
  EXPECT_DOUBLE_EQ(bids[0].bid.quantity, 2.0);
  EXPECT_EQ(bids[0].bid.valuation, p[19]);
}

TEST(AgentsTest, SplitsToFullestSlotWhenNothingFits)
{
  auto const          agent = need_at(18, 2.0, 1.3);
  std::vector<double> supply(24, 0.25);
  supply[4] = 1.0;
  auto const p    = ramp();
  auto const bids = make_bids(agent, supply, p);
  ASSERT_EQ(bids.size(), 1u);
  EXPECT_EQ(bids[0].slot, 4u);
  EXPECT_DOUBLE_EQ(bids[0].bid.quantity, 1.0);
}

TEST(AgentsTest, NoSupplyNoBids)
{
  auto const agent = need_at(3, 2.0, 1.0);
  EXPECT_TRUE(make_bids(agent, std::vector<double>(24, 0.0), ramp()).empty());
}

TEST(AgentsTest, ChunksOnOneSlotMerge)
{
  std::vector<double> demand(24, 0.0);
  demand[10] = 1.0;
  demand[12] = 1.0;
  AgentState const    agent(0, "c0", LoadVector(demand), 1.0);
  std::vector<double> supply(24, 0.0);
  supply[11] = 5.0;
  auto const bids = make_bids(agent, supply, ramp());
  ASSERT_EQ(bids.size(), 1u);
  EXPECT_EQ(bids[0].slot, 11u);
  EXPECT_DOUBLE_EQ(bids[0].bid.quantity, 2.0);
  EXPECT_EQ(bids[0].chunks.size(), 2u);
}

TEST(AgentsTest, BidsNeverExceedUnmetAndPriceIsAlphaTimesReserve)
{
  std::mt19937_64                        rng(4);
  std::uniform_real_distribution<double> kwh(0.0, 2.0);
  std::uniform_real_distribution<double> room(0.0, 6.0);
  auto const                             p = ramp();
  for (int rep = 0; rep < 500; ++rep)
  {
    std::vector<double> demand(24);
    std::vector<double> supply(24);
    for (std::size_t t = 0; t < 24; ++t)
    {
      demand[t] = rep % 3 == 0 && t % 2 ? 0.0 : kwh(rng);
      supply[t] = rep % 2 ? room(rng) : room(rng) * 0.1;
    }
    AgentState const agent(0, "c", LoadVector(demand), 1.6);
    double           asked = 0.0;
    for (auto const &b : make_bids(agent, supply, p))
    {
      EXPECT_EQ(b.bid.valuation, 1.6 * p[b.slot]);
      for (auto const &chunk : b.chunks)
      {
        EXPECT_LE(chunk.quantity, supply[b.slot] + 1e-9);
      }
      asked += b.bid.quantity;
    }
    EXPECT_LE(asked, agent.total_unmet() + 1e-9);
  }
}

TEST(AgentsTest, PartialOffers)
{
  auto const agent = need_at(0, 3.0, 1.0, 2);
  EXPECT_EQ(respond_to_partial(agent, 1.0, 4.0, 5.0), PartialResponse::Accept);
  EXPECT_EQ(respond_to_partial(agent, 1.0, 5.0, 5.0), PartialResponse::Accept);
  EXPECT_EQ(respond_to_partial(agent, 1.0, 6.0, 5.0), PartialResponse::WalkAway);
}

TEST(AgentsTest, AwardsKeepAccountingIdentity)
{
  std::vector<double> demand(24, 0.0);
  demand[5] = 1.0;
  demand[6] = 2.0;
  AgentState          agent(0, "c", LoadVector(demand), 1.0);
  std::vector<double> supply(24, 0.0);
  supply[7] = 10.0;
  auto const bids = make_bids(agent, supply, ramp());
  ASSERT_EQ(bids.size(), 1u);
  apply_award(agent, bids[0], 2.5);
  EXPECT_DOUBLE_EQ(agent.obtained[7], 2.5);
  EXPECT_DOUBLE_EQ(agent.total_obtained() + agent.total_unmet(), 3.0);
  // chunks are served in need-slot order
  EXPECT_DOUBLE_EQ(agent.unmet[5], 0.0);
  EXPECT_DOUBLE_EQ(agent.unmet[6], 0.5);
}

}  // namespace
