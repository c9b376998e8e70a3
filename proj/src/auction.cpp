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

#include "gridauction/auction.hpp"

#include "gridauction/grid_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gridauction {

double SlotOutcome::allocated() const noexcept
{
  double sum = 0.0;
  for (auto const &w : winners)
  {
    sum += w.quantity;
  }
  return sum;
}

double SlotOutcome::awarded_to(AgentId agent) const noexcept
{
  for (auto const &w : winners)
  {
    if (w.agent_id == agent)
    {
      return w.quantity;
    }
  }
  return 0.0;
}

bool accept_every_offer(Bid const & /*bid*/, double /*offered*/, double /*price*/)
{
  return true;
}

namespace {

void validate(std::span<Bid const> bids, double supply, double reserve)
{
  if (!(supply >= 0.0) || !std::isfinite(supply))
  {
    throw std::invalid_argument("slot supply must be a finite non-negative quantity");
  }
  if (!(reserve >= 0.0) || !std::isfinite(reserve))
  {
    throw std::invalid_argument("reserve price must be a finite non-negative price");
  }
  std::vector<AgentId> ids;
  ids.reserve(bids.size());
  for (auto const &b : bids)
  {
    if (!(b.quantity > kEnergyEpsilon) || !std::isfinite(b.quantity))
    {
      throw std::invalid_argument("bid of agent " + std::to_string(b.agent_id) +
                                  " must request a positive quantity");
    }
    if (!(b.valuation >= 0.0) || !std::isfinite(b.valuation))
    {
      throw std::invalid_argument("bid of agent " + std::to_string(b.agent_id) +
                                  " must carry a non-negative valuation");
    }
    ids.push_back(b.agent_id);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
  {
    throw std::invalid_argument("an agent may submit at most one bid per slot");
  }
}

}  // namespace

SlotOutcome clear_slot(std::span<Bid const> bids, double supply, double reserve,
                       PartialOfferPolicy const &on_partial)
{
  validate(bids, supply, reserve);

  SlotOutcome      outcome;
  std::vector<Bid> ranked;
  ranked.reserve(bids.size());
  for (auto const &b : bids)
  {
    if (b.valuation < reserve)
    {
      outcome.rejected.push_back(b.agent_id);
    }
    else
    {
      ranked.push_back(b);
    }
  }
  std::sort(outcome.rejected.begin(), outcome.rejected.end());
  std::sort(ranked.begin(), ranked.end(), [](Bid const &a, Bid const &b) {
    if (a.valuation != b.valuation)
    {
      return a.valuation > b.valuation;
    }
    return a.agent_id < b.agent_id;
  });

  std::size_t winner_count = 0;
  double      requested    = 0.0;
  while (winner_count < ranked.size() && requested < supply - kEnergyEpsilon)
  {
    requested += ranked[winner_count].quantity;
    ++winner_count;
  }

  outcome.clearing_price =
      winner_count < ranked.size() ? ranked[winner_count].valuation : reserve;

  double remaining = supply;
  for (std::size_t k = 0; k < winner_count; ++k)
  {
    Bid const &bid   = ranked[k];
    double     given = std::min(bid.quantity, remaining);
    if (given <= kEnergyEpsilon)
    {
      // can only be the marginal bidder on a fully sold slot
      continue;
    }
    if (given < bid.quantity - kEnergyEpsilon && !on_partial(bid, given, outcome.clearing_price))
    {
      outcome.walkaways.push_back(bid.agent_id);
      continue;
    }
    remaining -= given;
    outcome.winners.push_back({bid.agent_id, given});
  }
  outcome.leftover_supply = std::max(remaining, 0.0);
  return outcome;
}

}  // namespace gridauction
