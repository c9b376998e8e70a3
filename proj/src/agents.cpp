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

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace gridauction {

AgentState::AgentState(AgentId id, std::string consumer_id, LoadVector demand, double alpha)
  : id{id}
  , consumer_id{std::move(consumer_id)}
  , original_demand{std::move(demand)}
  , unmet(original_demand.begin(), original_demand.end())
  , obtained(original_demand.size(), 0.0)
  , alpha{alpha}
{
  if (!(alpha >= 1.0))
  {
    throw std::invalid_argument("valuation factor alpha must be at least 1");
  }
}

double AgentState::total_unmet() const noexcept
{
  return std::accumulate(unmet.begin(), unmet.end(), 0.0);
}

double AgentState::total_obtained() const noexcept
{
  return std::accumulate(obtained.begin(), obtained.end(), 0.0);
}

std::string_view to_string(ValuationKind kind) noexcept
{
  return kind == ValuationKind::US ? "us" : "uniform";
}

ValuationKind parse_valuation_kind(std::string_view name)
{
  if (name == "us" || name == "US")
  {
    return ValuationKind::US;
  }
  if (name == "uniform" || name == "Uniform")
  {
    return ValuationKind::Uniform;
  }
  throw ConfigError("unknown valuation distribution '" + std::string(name) +
                    "' (expected us or uniform)");
}

ValuationDistribution::ValuationDistribution(ValuationKind kind)
  : kind_{kind}
{
  switch (kind)
  {
  case ValuationKind::US:
    // household wealth shaped
    support_       = {1.0, 1.3, 1.5, 1.6, 1.9};
    probabilities_ = {0.4, 0.2, 0.2, 0.1, 0.1};
    break;
  case ValuationKind::Uniform:
    support_       = {1.0, 1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9};
    probabilities_ = std::vector<double>(support_.size(), 0.1);
    break;
  }
}

double ValuationDistribution::sample(std::mt19937_64 &rng) const
{
  std::discrete_distribution<std::size_t> pick(probabilities_.begin(), probabilities_.end());
  return support_[pick(rng)];
}

double sample_alpha(ValuationDistribution const &dist, std::mt19937_64 &rng)
{
  return dist.sample(rng);
}

namespace {

// Nearest slot to `need` holding at least `quantity`, scanning the need slot
// itself and then need+d before need-d.
std::optional<std::size_t> nearest_with_room(std::span<double const> supply, std::size_t need,
                                             double quantity)
{
  auto const fits = [&](std::size_t s) { return supply[s] >= quantity - kEnergyEpsilon; };
  if (fits(need))
  {
    return need;
  }
  for (std::size_t d = 1; d < supply.size(); ++d)
  {
    if (need + d < supply.size() && fits(need + d))
    {
      return need + d;
    }
    if (d <= need && fits(need - d))
    {
      return need - d;
    }
  }
  return std::nullopt;
}

// Slot with the most supply; ties go to the nearest, later first.
std::size_t fullest_slot(std::span<double const> supply, std::size_t need)
{
  std::size_t best = need;
  for (std::size_t d = 1; d < supply.size(); ++d)
  {
    if (need + d < supply.size() && supply[need + d] > supply[best])
    {
      best = need + d;
    }
    if (d <= need && supply[need - d] > supply[best])
    {
      best = need - d;
    }
  }
  return best;
}

}  // namespace

std::vector<SlotBid> make_bids(AgentState const &state, std::span<double const> remaining_supply,
                               ReservePriceVector const &reserves)
{
  if (remaining_supply.size() != state.unmet.size() || reserves.size() != state.unmet.size())
  {
    throw StructuralError("supply, reserves and demand must share one time grid");
  }

  std::vector<SlotBid> bids;
  auto const           bid_for = [&](std::size_t slot) -> SlotBid & {
    for (auto &b : bids)
    {
      if (b.slot == slot)
      {
        return b;
      }
    }
    SlotBid fresh;
    fresh.slot          = slot;
    fresh.bid.agent_id  = state.id;
    fresh.bid.valuation = state.alpha * reserves[slot];
    return bids.emplace_back(std::move(fresh));
  };

  for (std::size_t need = 0; need < state.unmet.size(); ++need)
  {
    double const want = state.unmet[need];
    if (want <= kEnergyEpsilon)
    {
      continue;
    }
    std::size_t target   = need;
    double      quantity = want;
    if (auto slot = nearest_with_room(remaining_supply, need, want))
    {
      target = *slot;
    }
    else
    {
      target   = fullest_slot(remaining_supply, need);
      quantity = std::min(want, remaining_supply[target]);
      if (quantity <= kEnergyEpsilon)
      {
        continue;
      }
    }
    if (state.alpha * reserves[target] < reserves[target])
    {
      continue;
    }
    SlotBid &bid = bid_for(target);
    bid.bid.quantity += quantity;
    bid.chunks.push_back({need, quantity});
  }

  std::sort(bids.begin(), bids.end(),
            [](SlotBid const &a, SlotBid const &b) { return a.slot < b.slot; });
  return bids;
}

PartialResponse respond_to_partial(AgentState const & /*state*/, double offered_qty,
                                   double clearing_price, double own_valuation)
{
  if (offered_qty <= 0.0)
  {
    return PartialResponse::WalkAway;
  }
  return clearing_price <= own_valuation ? PartialResponse::Accept : PartialResponse::WalkAway;
}

void apply_award(AgentState &state, SlotBid const &bid, double won)
{
  if (won <= 0.0)
  {
    return;
  }
  state.obtained[bid.slot] += won;
  double left = won;
  for (auto const &chunk : bid.chunks)
  {
    double const take = std::min(left, chunk.quantity);
    state.unmet[chunk.need_slot] = std::max(0.0, state.unmet[chunk.need_slot] - take);
    left -= take;
    if (left <= 0.0)
    {
      break;
    }
  }
}

}  // namespace gridauction
