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


#include "gridauction/pricing.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace gridauction;

TEST(PricingTest, CostExamples)
{
  CostModel const experiment(ExperimentCost{100.0, 1000.0, 4});
  EXPECT_NEAR(cost(experiment, 100.0), 0.01, 1e-15);

  EXPECT_DOUBLE_EQ(cost(CostModel(QuadraticCost{1.0, 0.0, 0.0}), 0.0), 0.0);
  EXPECT_DOUBLE_EQ(cost(CostModel(QuadraticCost{2.0, 3.0, 5.0}), 2.0), 19.0);
}

TEST(PricingTest, ParameterChecks)
{
  EXPECT_THROW(CostModel(QuadraticCost{0.0, 1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(CostModel(QuadraticCost{1.0, -1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(CostModel(ExperimentCost{100.0, 0.0, 10}), std::invalid_argument);
  EXPECT_THROW(CostModel(ExperimentCost{100.0, 1000.0, 0}), std::invalid_argument);
  EXPECT_THROW(cost(CostModel(QuadraticCost{}), -1.0), std::invalid_argument);
}

TEST(PricingTest, FlatBaselineGivesFlatPrices)
{
  LoadVector const flat(std::vector<double>(24, 350.0));
  for (CostModel const &m : {CostModel(QuadraticCost{0.5, 1.0, 2.0}),
                             CostModel(ExperimentCost{100.0, 1000.0, 100})})
  {
    auto const p = reserve_prices(m, flat);
    for (double x : p)
    {
      EXPECT_DOUBLE_EQ(x, p.front());
    }
  }
}

TEST(PricingTest, StrictPeakIsPricedHighest)
{
  LoadVector const load{150.0, 120.0, 400.0, 200.0, 110.0};
  for (CostModel const &m : {CostModel(QuadraticCost{0.5, 1.0, 0.0}),
                             CostModel(ExperimentCost{100.0, 1000.0, 100})})
  {
    auto const p = reserve_prices(m, load);
    for (std::size_t t = 0; t < p.size(); ++t)
    {
      if (t != 2)
      {
        EXPECT_LT(p[t], p[2]);
      }
    }
    EXPECT_TRUE(price_monotonicity_violations(load, p).empty());
  }
}

TEST(PricingTest, ZeroLoadSlotIsFree)
{
  auto const p = reserve_prices(CostModel(ExperimentCost{}), LoadVector{0.0, 10.0});
  EXPECT_EQ(p[0], 0.0);
  EXPECT_GT(p[1], 0.0);
}

TEST(PricingTest, CostIsIncreasingAndConvex)
{
  for (CostModel const &m : {CostModel(QuadraticCost{0.01, 2.0, 4.0}),
                             CostModel(ExperimentCost{100.0, 1000.0, 10000})})
  {
    double const h = 0.5;
    for (double l = 0.0; l < 5000.0; l += 7.3)
    {
      EXPECT_LT(m(l), m(l + h));
      EXPECT_GE(m(l + 2 * h) - 2 * m(l + h) + m(l), -1e-12 * m(l + 2 * h));
    }
  }
}

TEST(PricingTest, ExperimentPricePerKwhRisesWithLoadAboveMargin)
{
  CostModel const                        m(ExperimentCost{100.0, 1000.0, 10000});
  std::mt19937_64                        rng(1);
  std::uniform_real_distribution<double> load(100.0, 40000.0);
  for (int rep = 0; rep < 5000; ++rep)
  {
    double a = load(rng);
    double b = load(rng);
    if (a > b)
    {
      std::swap(a, b);
    }
    EXPECT_LE(m(a) / a, m(b) / b + 1e-15);
  }
}

TEST(PricingTest, BelowMarginPriceMonotonicityIsFlagged)
{
  // cost/L falls while L < q1
  LoadVector const load{20.0, 60.0};
  auto const       p = reserve_prices(CostModel(ExperimentCost{100.0, 1000.0, 100}), load);
  EXPECT_GT(p[0], p[1]);
  EXPECT_EQ(price_monotonicity_violations(load, p), std::vector<std::size_t>{1});
}

TEST(PricingTest, DoublingPopulationHalvesExperimentPrices)
{
  LoadVector const load{120.0, 340.0, 90.0, 1000.0};
  auto const       p1 = reserve_prices(CostModel(ExperimentCost{100.0, 1000.0, 500}), load);
  auto const       p2 = reserve_prices(CostModel(ExperimentCost{100.0, 1000.0, 1000}), load);
  for (std::size_t t = 0; t < p1.size(); ++t)
  {
    EXPECT_NEAR(p2[t], p1[t] / 2.0, 1e-15);
  }
}

}  // namespace
