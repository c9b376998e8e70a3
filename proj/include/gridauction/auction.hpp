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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gridauction {

using AgentId = std::size_t;

/// (quantity, unit valuation) offered by one agent for one slot.
struct Bid
{
  AgentId agent_id  = 0;
  double  quantity  = 0.0;  ///< kWh, > kEnergyEpsilon
  double  valuation = 0.0;  ///< money per kWh, >= 0

  bool operator==(Bid const &) const = default;
};

struct Award
{
  AgentId agent_id = 0;
  double  quantity = 0.0;

  bool operator==(Award const &) const = default;
};

struct SlotOutcome
{
  /// In fill order (descending valuation, ascending id); walk-aways removed.
  std::vector<Award>   winners;
  double               clearing_price  = 0.0;
  double               leftover_supply = 0.0;
  std::vector<AgentId> walkaways;
  /// Bids screened out for valuing below the reserve.
  std::vector<AgentId> rejected;

  double allocated() const noexcept;
  double awarded_to(AgentId agent) const noexcept;
};

/// Called for the one winner whose request was only partly filled. Returns
/// true to accept `offered` kWh at `price`, false to walk away.
using PartialOfferPolicy = std::function<bool(Bid const &bid, double offered, double price)>;

bool accept_every_offer(Bid const &bid, double offered, double price);

/// Uniform-price multiunit clearing of one slot.
///
/// Bids valued below `reserve` are rejected first. The rest are ranked by
/// valuation, highest first, ties by ascending agent id. Winners are the
/// shortest prefix of that ranking whose requests cover `supply`, or every
/// bidder when they do not. Everyone pays the valuation of the best-ranked
/// loser, or `reserve` when nobody loses. Supply is handed out in rank order,
/// so only the last winner can be short; she decides through `on_partial`,
/// and a walk-away puts her share back into the leftover.
///
/// Throws std::invalid_argument on malformed bids or a duplicated agent id.
SlotOutcome clear_slot(std::span<Bid const> bids, double supply, double reserve,
                       PartialOfferPolicy const &on_partial = accept_every_offer);

}  // namespace gridauction
