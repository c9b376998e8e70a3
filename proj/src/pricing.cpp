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

#include <cmath>
#include <stdexcept>

namespace gridauction {

CostModel::CostModel(QuadraticCost form)
  : form_{form}
{
  // c2 >= 0 keeps the quadratic increasing from L = 0 onwards
  if (!(form.c1 > 0.0) || form.c2 < 0.0 || form.c3 < 0.0)
  {
    throw std::invalid_argument("quadratic cost needs c1 > 0, c2 >= 0, c3 >= 0");
  }
}

CostModel::CostModel(ExperimentCost form)
  : form_{form}
{
  if (form.q1 < 0.0 || !(form.q2 > 0.0) || form.population == 0)
  {
    throw std::invalid_argument("experiment cost needs q1 >= 0, q2 > 0 and a non-empty population");
  }
}

double CostModel::operator()(double load) const
{
  if (load < 0.0)
  {
    throw std::invalid_argument("cost is only defined for non-negative load");
  }
  if (auto const *q = std::get_if<QuadraticCost>(&form_))
  {
    return q->c1 * load * load + q->c2 * load + q->c3;
  }
  auto const &e     = std::get<ExperimentCost>(form_);
  double const root = e.q2 * std::sqrt(static_cast<double>(e.population));
  double const x    = (load + e.q1) / root;
  return x * x;
}

double cost(CostModel const &model, double load)
{
  return model(load);
}

ReservePriceVector reserve_prices(CostModel const &model, LoadVector const &baseline)
{
  ReservePriceVector prices(baseline.size(), 0.0);
  for (std::size_t t = 0; t < baseline.size(); ++t)
  {
    if (baseline[t] > 0.0)
    {
      prices[t] = model(baseline[t]) / baseline[t];
    }
  }
  return prices;
}

std::vector<std::size_t> price_monotonicity_violations(LoadVector const &baseline,
                                                       ReservePriceVector const &prices)
{
  std::vector<std::size_t> bad;
  for (std::size_t t = 0; t < baseline.size(); ++t)
  {
    for (std::size_t s = 0; s < baseline.size(); ++s)
    {
      if (baseline[s] > 0.0 && baseline[s] < baseline[t] && prices[s] > prices[t])
      {
        bad.push_back(t);
        break;
      }
    }
  }
  return bad;
}

}  // namespace gridauction
