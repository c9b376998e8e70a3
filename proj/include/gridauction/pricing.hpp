#pragma once
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

#include "gridauction/grid_model.hpp"

#include <variant>
#include <vector>

namespace gridauction {

/// cost(L) = c1 L^2 + c2 L + c3, with c1 > 0.
struct QuadraticCost
{
  double c1 = 1.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// cost(L) = ((L + q1) / (q2 * sqrt(population)))^2. q1 is the supplier's
/// margin, q2 damps price growth.
struct ExperimentCost
{
  double      q1         = 100.0;
  double      q2         = 1000.0;
  std::size_t population = 1;
};

/// Generation cost of a slot's aggregate load. Both forms are increasing and
/// convex on L >= 0 given their parameter checks.
class CostModel
{
public:
  explicit CostModel(QuadraticCost form);
  explicit CostModel(ExperimentCost form);

  double operator()(double load) const;

  std::variant<QuadraticCost, ExperimentCost> const &form() const noexcept
  {
    return form_;
  }

private:
  std::variant<QuadraticCost, ExperimentCost> form_;
};

/// Per-slot price per kWh. Note: prices are per kWh, 1000x a per-Wh price.
using ReservePriceVector = std::vector<double>;

double cost(CostModel const &model, double load);

/// p(t) = cost(L(t)) / L(t) over the uncut aggregate; zero-load slots price at 0.
ReservePriceVector reserve_prices(CostModel const &model, LoadVector const &baseline);

/// Slots whose reserve price is lower than that of some strictly lighter
/// slot, i.e. where "more load costs more per kWh" does not hold. 0-based.
std::vector<std::size_t> price_monotonicity_violations(LoadVector const &baseline,
                                                       ReservePriceVector const &prices);

}  // namespace gridauction
