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

#include "gridauction/session.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

namespace gridauction {

AllocationLedger::AllocationLedger(std::size_t consumers, std::size_t slots)
  : consumers_{consumers}
  , slots_{slots}
  , allocated_(consumers * slots, 0.0)
  , payment_(consumers * slots, 0.0)
{}

void AllocationLedger::record(AgentId consumer, std::size_t slot, double quantity, double price)
{
  if (quantity < 0.0 || price < 0.0)
  {
    throw std::invalid_argument("ledger entries must be non-negative");
  }
  allocated_[consumer * slots_ + slot] += quantity;
  payment_[consumer * slots_ + slot] += quantity * price;
}

LoadVector AllocationLedger::obtained(AgentId consumer) const
{
  auto const first = allocated_.begin() + static_cast<std::ptrdiff_t>(consumer * slots_);
  return LoadVector(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(slots_)));
}

double AllocationLedger::total_payment(AgentId consumer) const
{
  auto const first = payment_.begin() + static_cast<std::ptrdiff_t>(consumer * slots_);
  return std::accumulate(first, first + static_cast<std::ptrdiff_t>(slots_), 0.0);
}

double AllocationLedger::total_allocated() const
{
  return std::accumulate(allocated_.begin(), allocated_.end(), 0.0);
}

double AllocationLedger::total_payments() const
{
  return std::accumulate(payment_.begin(), payment_.end(), 0.0);
}

LoadVector AllocationLedger::slot_totals() const
{
  std::vector<double> sum(slots_, 0.0);
  for (std::size_t i = 0; i < consumers_; ++i)
  {
    for (std::size_t t = 0; t < slots_; ++t)
    {
      sum[t] += allocated_[i * slots_ + t];
    }
  }
  return LoadVector(std::move(sum));
}

void check_supply_guarantee(LoadVector const &original_aggregate, LoadVector const &cut,
                            GuaranteeConfig guarantee, std::size_t population)
{
  if (original_aggregate.size() != cut.size())
  {
    throw StructuralError("cut and original load must share one time grid");
  }
  if (guarantee.minimal_load < 0.0)
  {
    throw ConfigError("minimal load guarantee must be non-negative");
  }
  double const needed = guarantee.minimal_load * static_cast<double>(population);
  for (std::size_t t = 0; t < cut.size(); ++t)
  {
    bool const shortage = cut[t] < original_aggregate[t] - kEnergyEpsilon;
    if (shortage && cut[t] < needed - kEnergyEpsilon)
    {
      throw ConfigError("slot " + std::to_string(t + 1) + " is short of supply (" +
                        format_number(cut[t]) + " kWh) and cannot guarantee " +
                        format_number(guarantee.minimal_load) + " kWh to each of " +
                        std::to_string(population) + " consumers");
    }
  }
}

InitialAllocation initialize_allocations(std::span<ConsumerDemand const> original,
                                         LoadVector const &cut, GuaranteeConfig guarantee,
                                         ReservePriceVector const &reserves)
{
  std::size_t const slots = cut.size();
  if (reserves.size() != slots)
  {
    throw StructuralError("reserve prices must cover every slot");
  }
  LoadVector const total = aggregate(original, slots);
  double const     sum   = total_load(total);
  if (std::abs(sum - total_load(cut)) > kEnergyEpsilon * static_cast<double>(slots) + 1e-12 * sum)
  {
    throw StructuralError("cut load must conserve the original total");
  }
  check_supply_guarantee(total, cut, guarantee, original.size());

  InitialAllocation init{AllocationLedger(original.size(), slots), std::vector<double>(slots)};
  for (std::size_t t = 0; t < slots; ++t)
  {
    bool const shortage = cut[t] < total[t] - kEnergyEpsilon;
    double     handed   = 0.0;
    for (std::size_t i = 0; i < original.size(); ++i)
    {
      double const want = original[i].demand[t];
      double const give = shortage ? std::min(guarantee.minimal_load, want) : want;
      if (give > 0.0)
      {
        init.ledger.record(i, t, give, reserves[t]);
        handed += give;
      }
    }
    init.remaining[t] = std::max(0.0, cut[t] - handed);
  }
  return init;
}

std::string_view to_string(SessionStatus status) noexcept
{
  switch (status)
  {
  case SessionStatus::SupplyExhausted:
    return "supply_exhausted";
  case SessionStatus::NoBids:
    return "no_bids";
  case SessionStatus::RoundCapReached:
    return "round_cap_reached";
  }
  return "unknown";
}

namespace {

bool supply_left(std::span<double const> remaining)
{
  return std::any_of(remaining.begin(), remaining.end(),
                     [](double x) { return x > kEnergyEpsilon; });
}

}  // namespace

SessionResult run_session(std::vector<AgentState> agents, LoadVector const &cut,
                          ReservePriceVector const &reserves, GuaranteeConfig guarantee,
                          SessionOptions const &options)
{
  if (options.round_cap < 1)
  {
    throw ConfigError("round cap must be at least 1");
  }
  std::size_t const slots = cut.size();
  for (std::size_t i = 0; i < agents.size(); ++i)
  {
    if (agents[i].id != i)
    {
      throw std::invalid_argument("agent ids must be 0..N-1 in order");
    }
    if (agents[i].original_demand.size() != slots)
    {
      throw StructuralError("agent " + agents[i].consumer_id + " is on a different time grid");
    }
  }

  std::vector<ConsumerDemand> demands;
  demands.reserve(agents.size());
  for (auto const &a : agents)
  {
    demands.push_back({a.consumer_id, a.original_demand});
  }

  auto init = initialize_allocations(demands, cut, guarantee, reserves);

  SessionResult result;
  result.ledger    = std::move(init.ledger);
  result.remaining = std::move(init.remaining);
  for (auto &a : agents)
  {
    a.unmet.assign(a.original_demand.begin(), a.original_demand.end());
    a.obtained.assign(slots, 0.0);
    for (std::size_t t = 0; t < slots; ++t)
    {
      double const got = result.ledger.allocated(a.id, t);
      a.obtained[t]    = got;
      a.unmet[t]       = std::max(0.0, a.unmet[t] - got);
    }
  }

  result.status = SessionStatus::SupplyExhausted;
  std::vector<std::vector<SlotBid>> by_slot(slots);
  while (supply_left(result.remaining))
  {
    if (result.ledger.rounds >= options.round_cap)
    {
      result.status = SessionStatus::RoundCapReached;
      break;
    }

    // simultaneous bids: everyone sees the same opening snapshot
    for (auto &v : by_slot)
    {
      v.clear();
    }
    bool any_bid = false;
    for (auto const &a : agents)
    {
      for (auto &b : make_bids(a, result.remaining, reserves))
      {
        any_bid = true;
        by_slot[b.slot].push_back(std::move(b));
      }
    }
    if (!any_bid)
    {
      result.status = SessionStatus::NoBids;
      break;
    }

    std::size_t const round = ++result.ledger.rounds;
    for (std::size_t t = 0; t < slots; ++t)
    {
      auto const &slot_bids = by_slot[t];
      if (slot_bids.empty())
      {
        continue;
      }
      std::vector<Bid> bids;
      bids.reserve(slot_bids.size());
      for (auto const &b : slot_bids)
      {
        bids.push_back(b.bid);
      }

      auto const on_partial = [&](Bid const &bid, double offered, double price) {
        auto const &agent = agents[bid.agent_id];
        // a truthful agent's own valuation is what she bid
        return respond_to_partial(agent, offered, price, bid.valuation) ==
               PartialResponse::Accept;
      };
      SlotOutcome const outcome = clear_slot(bids, result.remaining[t], reserves[t], on_partial);

      for (auto const &b : slot_bids)
      {
        double const won = outcome.awarded_to(b.bid.agent_id);
        if (won > 0.0)
        {
          apply_award(agents[b.bid.agent_id], b, won);
          result.ledger.record(b.bid.agent_id, t, won, outcome.clearing_price);
        }
        if (options.record_trace)
        {
          result.trace.push_back({round, t + 1, b.bid.agent_id, b.bid.quantity, b.bid.valuation,
                                  won, outcome.clearing_price});
        }
      }
      result.remaining[t] = outcome.leftover_supply;
    }
  }

  result.consumer_satisfied.resize(agents.size());
  result.satisfied = result.status != SessionStatus::RoundCapReached;
  for (auto const &a : agents)
  {
    bool const ok = std::abs(a.total_obtained() - total_load(a.original_demand)) <=
                    kSatisfactionTolerance;
    result.consumer_satisfied[a.id] = ok;
    result.satisfied                = result.satisfied && ok;
  }
  result.agents = std::move(agents);
  return result;
}

void write_trace_csv(std::ostream &out, std::span<TraceRow const> rows)
{
  out << "round,slot,agent_id,bid_qty_kwh,bid_price,won_qty_kwh,clearing_price\n";
  for (auto const &r : rows)
  {
    out << r.round << ',' << r.slot << ',' << r.agent_id << ',' << format_number(r.bid_qty) << ','
        << format_number(r.bid_price) << ',' << format_number(r.won_qty) << ','
        << format_number(r.clearing_price) << '\n';
  }
}

}  // namespace gridauction
