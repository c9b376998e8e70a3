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

#include "gridauction/auction.hpp"
#include "gridauction/grid_model.hpp"
#include "gridauction/pricing.hpp"

#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridauction {

/// A consumer's bidding agent. `unmet` is indexed by the slot where the
/// energy was originally needed, `obtained` by the slot it is delivered in.
struct AgentState
{
  AgentId             id = 0;
  std::string         consumer_id;
  LoadVector          original_demand;
  std::vector<double> unmet;
  std::vector<double> obtained;
  double              alpha = 1.0;

  AgentState() = default;
  AgentState(AgentId id, std::string consumer_id, LoadVector demand, double alpha);

  double total_unmet() const noexcept;
  double total_obtained() const noexcept;
};

enum class ValuationKind
{
  US,
  Uniform,
};

std::string_view   to_string(ValuationKind kind) noexcept;
ValuationKind      parse_valuation_kind(std::string_view name);

/// Discrete distribution of the valuation factor alpha.
class ValuationDistribution
{
public:
  explicit ValuationDistribution(ValuationKind kind);

  ValuationKind kind() const noexcept
  {
    return kind_;
  }
  std::vector<double> const &support() const noexcept
  {
    return support_;
  }
  std::vector<double> const &probabilities() const noexcept
  {
    return probabilities_;
  }

  double sample(std::mt19937_64 &rng) const;

private:
  ValuationKind       kind_;
  std::vector<double> support_;
  std::vector<double> probabilities_;
};

double sample_alpha(ValuationDistribution const &dist, std::mt19937_64 &rng);

/// Part of a bid that serves the unmet demand of one original slot.
struct DemandChunk
{
  std::size_t need_slot = 0;
  double      quantity  = 0.0;
};

/// One agent's bid for one slot, with the needs it covers.
struct SlotBid
{
  std::size_t              slot = 0;
  Bid                      bid;
  std::vector<DemandChunk> chunks;
};

/// Truthful myopic bids against this round's opening supply.
///
/// Each unmet chunk goes to its own slot when that slot can cover it whole,
/// otherwise to the nearest slot that can (later slot on equal distance). If
/// no slot can, the agent asks for what the fullest slot holds. Chunks that
/// land on the same slot are merged, one bid per slot, valued at
/// alpha * reserve of the slot bid on.
std::vector<SlotBid> make_bids(AgentState const &state, std::span<double const> remaining_supply,
                               ReservePriceVector const &reserves);

enum class PartialResponse
{
  Accept,
  WalkAway,
};

PartialResponse respond_to_partial(AgentState const &state, double offered_qty,
                                   double clearing_price, double own_valuation);

/// Books `won` kWh delivered in `bid.slot` against the bid's chunks, in order.
void apply_award(AgentState &state, SlotBid const &bid, double won);

}  // namespace gridauction
