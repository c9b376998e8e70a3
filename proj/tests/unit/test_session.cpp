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


#include "gridauction/par_cut.hpp"
#include "gridauction/session.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace {

using namespace gridauction;

std::vector<AgentState> agents_from(std::vector<std::vector<double>> const &rows,
                                    std::vector<double> const           &alphas)
{
  std::vector<AgentState> agents;
  for (std::size_t i = 0; i < rows.size(); ++i)
  {
    agents.emplace_back(i, "c" + std::to_string(i), LoadVector(rows[i]), alphas[i]);
  }
  return agents;
}

LoadVector total_of(std::vector<AgentState> const &agents)
{
  std::vector<ConsumerDemand> d;
  for (auto const &a : agents)
  {
    d.push_back({a.consumer_id, a.original_demand});
  }
  return aggregate(d, agents.front().original_demand.size());
}

// Five households all wanting slot 19; the first also carries the rest of
// the evening-peak profile.
std::vector<AgentState> evening_five()
{
  std::vector<std::vector<double>> rows(5, std::vector<double>(24, 0.0));
  for (auto &r : rows)
  {
    r[18] = 1.0;
  }
  for (std::size_t t = 0; t < 24; ++t)
  {
    if (t != 18)
    {
      rows[0][t] = 1.0;
    }
  }
  rows[0][17] = rows[0][19] = 2.0;
  return agents_from(rows, {1.9, 1.6, 1.5, 1.3, 1.0});
}

ReservePriceVector prices_for(LoadVector const &load)
{
  return reserve_prices(CostModel(QuadraticCost{1.0, 0.0, 0.0}), load);
}

TEST(SessionTest, NoCutMeansNoAuction)
{
  auto const agents   = evening_five();
  auto const total    = total_of(agents);
  auto const reserves = prices_for(total);
  auto const result   = run_session(agents, total, reserves, GuaranteeConfig{0.5});
  EXPECT_EQ(result.rounds(), 0u);
  EXPECT_TRUE(result.satisfied);
  EXPECT_EQ(result.status, SessionStatus::SupplyExhausted);
  for (double r : result.remaining)
  {
    EXPECT_DOUBLE_EQ(r, 0.0);
  }
  for (auto const &a : agents)
  {
    double bill = 0.0;
    for (std::size_t t = 0; t < 24; ++t)
    {
      bill += a.original_demand[t] * reserves[t];
      EXPECT_DOUBLE_EQ(result.ledger.allocated(a.id, t), a.original_demand[t]);
    }
    EXPECT_NEAR(result.ledger.total_payment(a.id), bill, 1e-12);
  }
}

TEST(SessionTest, GuaranteeDisabledLeavesShortageSlotEmpty)
{
  auto const agents = evening_five();
  std::vector<ConsumerDemand> demands;
  for (auto const &a : agents)
  {
    demands.push_back({a.consumer_id, a.original_demand});
  }
  auto const total = total_of(agents);
  auto const cut   = par_cut(CutPercentage(0.4), total).load();
  auto const init  = initialize_allocations(demands, cut, GuaranteeConfig{0.0}, prices_for(total));
  for (std::size_t i = 0; i < 5; ++i)
  {
    EXPECT_EQ(init.ledger.allocated(i, 18), 0.0);
  }
  EXPECT_NEAR(init.remaining[18], 3.0, 1e-12);
  EXPECT_NEAR(init.remaining[17], 1.0, 1e-12);
  EXPECT_NEAR(init.remaining[19], 1.0, 1e-12);
}

TEST(SessionTest, GuaranteeSplitsShortageSlot)
{
  std::vector<ConsumerDemand> const demands{{"a", LoadVector{3.0, 0.0}},
                                            {"b", LoadVector{3.0, 0.0}}};
  LoadVector const                  cut{4.0, 2.0};
  auto const init = initialize_allocations(demands, cut, GuaranteeConfig{1.0}, {1.0, 1.0});
  EXPECT_DOUBLE_EQ(init.ledger.allocated(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(init.ledger.allocated(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(init.remaining[0], 2.0);
  EXPECT_DOUBLE_EQ(init.remaining[1], 2.0);
}

TEST(SessionTest, GuaranteeViolationNamesTheSlot)
{
  std::vector<ConsumerDemand> const demands{{"a", LoadVector{3.0, 0.0}},
                                            {"b", LoadVector{3.0, 0.0}}};
  try
  {
    initialize_allocations(demands, LoadVector{1.0, 5.0}, GuaranteeConfig{1.0}, {1.0, 1.0});
    FAIL() << "expected ConfigError";
  }
  catch (ConfigError const &e)
  {
    EXPECT_NE(std::string(e.what()).find("slot 1 "), std::string::npos) << e.what();
  }
  EXPECT_THROW(initialize_allocations(demands, LoadVector{4.0, 4.0}, GuaranteeConfig{0.0}, {1, 1}),
               StructuralError);
}

TEST(SessionTest, EveningFiveClearsByValuation)
{
  auto const agents   = evening_five();
  auto const total    = total_of(agents);
  auto const cut      = par_cut(CutPercentage(0.4), total).load();
  auto const reserves = prices_for(total);

  SessionOptions opts;
  opts.record_trace = true;
  auto const r      = run_session(agents, cut, reserves, GuaranteeConfig{0.0}, opts);

  EXPECT_TRUE(r.satisfied);
  EXPECT_LE(r.rounds(), 3u);
  EXPECT_NEAR(r.ledger.total_allocated(), total_load(total), 1e-9);

  // the three strongest keep slot 19 at the fourth-best valuation
  for (AgentId i : {0u, 1u, 2u})
  {
    EXPECT_DOUBLE_EQ(r.ledger.allocated(i, 18), 1.0);
    EXPECT_NEAR(r.ledger.payment(i, 18), 1.3 * reserves[18], 1e-12);
  }
  EXPECT_DOUBLE_EQ(r.ledger.allocated(3, 19), 1.0);
  EXPECT_DOUBLE_EQ(r.ledger.allocated(4, 17), 1.0);
}

TEST(SessionTest, RoundCapIsReportedNotHidden)
{
  auto const agents = evening_five();
  auto const total  = total_of(agents);
  auto const cut    = par_cut(CutPercentage(0.4), total).load();
  SessionOptions opts;
  opts.round_cap = 1;
  auto const r   = run_session(agents, cut, prices_for(total), GuaranteeConfig{0.0}, opts);
  EXPECT_EQ(r.status, SessionStatus::RoundCapReached);
  EXPECT_FALSE(r.satisfied);
  EXPECT_FALSE(r.consumer_satisfied[4]);
}

TEST(SessionTest, StrongestBidderNeverShifts)
{
  auto const agents = agents_from({{1, 1, 2, 1, 1}, {1, 1, 2, 1, 1}, {1, 1, 2, 1, 1}},
                                  {1.9, 1.0, 1.0});
  auto const total  = total_of(agents);
  auto const cut    = par_cut(CutPercentage(1.0 / 3.0), total);
  ASSERT_TRUE(cut.feasible());
  for (double m : {0.0, 0.5})
  {
    auto const r = run_session(agents, cut.load(), prices_for(total), GuaranteeConfig{m});
    EXPECT_TRUE(r.satisfied);
    EXPECT_EQ(r.ledger.obtained(0), agents[0].original_demand);
  }
}

TEST(SessionTest, RandomSessionsKeepTheBooks)
{
  std::mt19937_64                        rng(31);
  std::uniform_real_distribution<double> kwh(0.0, 2.0);
  std::uniform_real_distribution<double> cut_pick(0.05, 0.5);
  std::uniform_int_distribution<int>     alpha_pick(0, 9);
  int                                    sessions = 0;
  for (int rep = 0; rep < 200; ++rep)
  {
    std::size_t const                slots = 8;
    std::size_t const                n     = 2 + static_cast<std::size_t>(rep % 7);
    std::vector<std::vector<double>> rows(n, std::vector<double>(slots));
    std::vector<double>              alphas(n);
    for (std::size_t i = 0; i < n; ++i)
    {
      for (auto &x : rows[i])
      {
        x = kwh(rng);
      }
      rows[i][5] += 3.0 * kwh(rng);
      alphas[i] = 1.0 + 0.1 * alpha_pick(rng);
    }
    auto const agents = agents_from(rows, alphas);
    auto const total  = total_of(agents);
    auto const cut    = par_cut(CutPercentage(cut_pick(rng)), total);
    if (!cut.feasible())
    {
      continue;
    }
    ++sessions;
    auto const     reserves = reserve_prices(CostModel(QuadraticCost{0.2, 1.0, 0.0}), total);
    SessionOptions opts;
    opts.record_trace = true;
    auto const r      = run_session(agents, cut.load(), reserves, GuaranteeConfig{0.0}, opts);

    double const leftover = std::accumulate(r.remaining.begin(), r.remaining.end(), 0.0);
    EXPECT_NEAR(r.ledger.total_allocated() + leftover, total_load(cut.load()),
                1e-9 * static_cast<double>(slots));
    EXPECT_NE(r.status, SessionStatus::RoundCapReached);

    for (auto const &a : r.agents)
    {
      EXPECT_NEAR(a.total_obtained() + a.total_unmet(), total_load(a.original_demand), 1e-9);
      EXPECT_NEAR(a.total_obtained(), total_load(r.ledger.obtained(a.id)), 1e-9);
    }

    std::map<std::pair<std::size_t, std::size_t>, double> price;
    std::map<std::size_t, double>                         won_in_round;
    for (auto const &row : r.trace)
    {
      EXPECT_GE(row.clearing_price, reserves[row.slot - 1]);
      auto const [it, fresh] = price.emplace(std::pair{row.round, row.slot}, row.clearing_price);
      if (!fresh)
      {
        EXPECT_EQ(it->second, row.clearing_price);
      }
      won_in_round[row.round] += row.won_qty;
    }
    EXPECT_EQ(won_in_round.size(), r.rounds());
    for (auto const &[round, won] : won_in_round)
    {
      EXPECT_GT(won, 0.0) << "round " << round << " made no progress";
    }
  }
  EXPECT_GT(sessions, 50);
}

TEST(SessionTest, TraceCsvHeader)
{
  std::ostringstream out;
  TraceRow const     row{1, 19, 3, 1.0, 2.5, 1.0, 2.0};
  write_trace_csv(out, std::span(&row, 1));
  EXPECT_EQ(out.str(),
            "round,slot,agent_id,bid_qty_kwh,bid_price,won_qty_kwh,clearing_price\n"
            "1,19,3,1,2.5,1,2\n");
}

}  // namespace
