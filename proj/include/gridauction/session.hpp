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

#include "gridauction/agents.hpp"
#include "gridauction/auction.hpp"
#include "gridauction/grid_model.hpp"
#include "gridauction/pricing.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace gridauction {

/// Per-consumer tolerance when checking that obtained energy matches demand.
inline constexpr double kSatisfactionTolerance = 1e-6;

/// Auctioneer's books: cumulative energy and payment per consumer and slot.
class AllocationLedger
{
public:
  AllocationLedger() = default;
  AllocationLedger(std::size_t consumers, std::size_t slots);

  void record(AgentId consumer, std::size_t slot, double quantity, double price);

  double allocated(AgentId consumer, std::size_t slot) const
  {
    return allocated_[consumer * slots_ + slot];
  }
  double payment(AgentId consumer, std::size_t slot) const
  {
    return payment_[consumer * slots_ + slot];
  }

  LoadVector obtained(AgentId consumer) const;
  double     total_payment(AgentId consumer) const;
  double     total_allocated() const;
  double     total_payments() const;
  /// Energy handed out in each slot across all consumers.
  LoadVector slot_totals() const;

  std::size_t consumers() const noexcept
  {
    return consumers_;
  }
  std::size_t slots() const noexcept
  {
    return slots_;
  }

  /// Number of auction rounds run after the initial allocation.
  std::size_t rounds = 0;

private:
  std::size_t         consumers_ = 0;
  std::size_t         slots_     = 0;
  std::vector<double> allocated_;
  std::vector<double> payment_;
};

struct GuaranteeConfig
{
  double minimal_load = 0.0;  ///< kWh per consumer per shortage slot
};

struct InitialAllocation
{
  AllocationLedger    ledger;
  std::vector<double> remaining;  ///< supply left for round 1, per slot
};

/// Round 0. Slots where the cut supply covers the original aggregate hand
/// every consumer her demand; shortage slots hand each consumer the minimal
/// load (capped at her own demand there). Everything is charged at reserve.
///
/// Throws ConfigError when a shortage slot cannot cover the guarantee for the
/// whole population, StructuralError on mismatched grids or totals.
InitialAllocation initialize_allocations(std::span<ConsumerDemand const> original,
                                         LoadVector const &cut, GuaranteeConfig guarantee,
                                         ReservePriceVector const &reserves);

/// Throws ConfigError naming the first shortage slot that breaks the supply
/// guarantee, i.e. cut(t) < original(t) and cut(t) < m * population.
void check_supply_guarantee(LoadVector const &original_aggregate, LoadVector const &cut,
                            GuaranteeConfig guarantee, std::size_t population);

enum class SessionStatus
{
  SupplyExhausted,  ///< nothing left to hand out
  NoBids,           ///< supply left but nobody bid
  RoundCapReached,
};

std::string_view to_string(SessionStatus status) noexcept;

struct SessionOptions
{
  std::size_t round_cap    = 1000;
  bool        record_trace = false;
};

/// One bid and its result, for audit. Slots are 1-based here.
struct TraceRow
{
  std::size_t round          = 0;
  std::size_t slot           = 0;
  AgentId     agent_id       = 0;
  double      bid_qty        = 0.0;
  double      bid_price      = 0.0;
  double      won_qty        = 0.0;
  double      clearing_price = 0.0;
};

struct SessionResult
{
  AllocationLedger        ledger;
  std::vector<AgentState> agents;
  std::vector<double>     remaining;  ///< final leftover supply per slot
  SessionStatus           status = SessionStatus::SupplyExhausted;
  std::vector<bool>       consumer_satisfied;
  bool                    satisfied = false;
  std::vector<TraceRow>   trace;

  std::size_t rounds() const noexcept
  {
    return ledger.rounds;
  }
};

/// Runs round 0 and then auction rounds until supply is gone, nobody bids,
/// or the round cap is hit. Every round collects all bids against the same
/// supply snapshot, then clears each slot on its own. Whether each consumer
/// ended with her full daily demand is checked afterwards and reported, never
/// forced.
SessionResult run_session(std::vector<AgentState> agents, LoadVector const &cut,
                          ReservePriceVector const &reserves, GuaranteeConfig guarantee,
                          SessionOptions const &options = {});

void write_trace_csv(std::ostream &out, std::span<TraceRow const> rows);

}  // namespace gridauction
