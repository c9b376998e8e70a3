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

#include "gridauction/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gridauction {

double shift_percentage(LoadVector const &original, LoadVector const &obtained)
{
  if (original.size() != obtained.size())
  {
    throw StructuralError("shift percentage needs vectors on one time grid");
  }
  double const total = total_load(original);
  if (total <= 0.0)
  {
    throw std::invalid_argument("shift percentage needs a positive original demand");
  }
  double moved = 0.0;
  for (std::size_t t = 0; t < original.size(); ++t)
  {
    moved += std::abs(obtained[t] - original[t]);
  }
  return std::clamp(moved / (2.0 * total), 0.0, 1.0);
}

double baseline_cost(LoadVector const &demand, ReservePriceVector const &reserves)
{
  if (demand.size() != reserves.size())
  {
    throw StructuralError("baseline cost needs one reserve price per slot");
  }
  double sum = 0.0;
  for (std::size_t t = 0; t < demand.size(); ++t)
  {
    sum += demand[t] * reserves[t];
  }
  return sum;
}

double system_cost(CostModel const &model, LoadVector const &load)
{
  double sum = 0.0;
  for (double x : load)
  {
    sum += model(x);
  }
  return sum;
}

double producer_revenue(AllocationLedger const &ledger)
{
  return ledger.total_payments();
}

std::vector<ConsumerReport> consumer_reports(SessionResult const &session,
                                             ReservePriceVector const &reserves)
{
  std::vector<ConsumerReport> reports;
  reports.reserve(session.agents.size());
  for (auto const &agent : session.agents)
  {
    ConsumerReport r;
    r.consumer_id    = agent.consumer_id;
    r.alpha          = agent.alpha;
    r.total_demand   = total_load(agent.original_demand);
    LoadVector const got = session.ledger.obtained(agent.id);
    r.total_obtained = total_load(got);
    r.shift_fraction = shift_percentage(agent.original_demand, got);
    r.auction_cost   = session.ledger.total_payment(agent.id);
    r.baseline_cost  = baseline_cost(agent.original_demand, reserves);
    r.saving_fraction = r.baseline_cost > 0.0 ? 1.0 - r.auction_cost / r.baseline_cost : 0.0;
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace gridauction
