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
#include "gridauction/pricing.hpp"
#include "gridauction/session.hpp"

#include <string>
#include <vector>

namespace gridauction {

struct ConsumerReport
{
  std::string consumer_id;
  double      alpha           = 1.0;
  double      total_demand    = 0.0;
  double      total_obtained  = 0.0;
  double      shift_fraction  = 0.0;
  double      auction_cost    = 0.0;
  double      baseline_cost   = 0.0;
  double      saving_fraction = 0.0;
};

struct SystemReport
{
  double cut_percentage            = 0.0;
  double par_before                = 0.0;
  double par_after                 = 0.0;
  double system_cost_before        = 0.0;
  double system_cost_after         = 0.0;
  double producer_revenue_auction  = 0.0;
  double producer_revenue_baseline = 0.0;
  bool   satisfied                 = false;
};

/// sum |obtained - original| / (2 * sum original), in [0, 1].
double shift_percentage(LoadVector const &original, LoadVector const &obtained);

/// What the consumer pays today: her demand priced at the uncut reserves.
double baseline_cost(LoadVector const &demand, ReservePriceVector const &reserves);

/// Sum of per-slot generation costs.
double system_cost(CostModel const &model, LoadVector const &load);

/// Everything consumers paid, round 0 included.
double producer_revenue(AllocationLedger const &ledger);

std::vector<ConsumerReport> consumer_reports(SessionResult const &session,
                                             ReservePriceVector const &reserves);

}  // namespace gridauction
