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

#include "gridauction/config.hpp"
#include "gridauction/metrics.hpp"
#include "gridauction/session.hpp"
#include "gridauction/stats.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace gridauction {

enum class RngStream : std::uint64_t
{
  Demand    = 1,
  Valuation = 2,
};

/// Independent generator for one trial and purpose, derived from the master
/// seed. The same (seed, trial, stream, tag) always yields the same sequence.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial, RngStream stream,
                          std::uint64_t tag = 0);

/// Synthetic evening-peaked households: uniform base load per slot, a morning
/// bump and a larger evening bump, each centred on a random slot of its
/// window with `shoulder` of the magnitude on the neighbouring slots.
std::vector<ConsumerDemand> generate_demands(ScenarioConfig const &config, std::mt19937_64 &rng);

/// Demands for one trial: the CSV file when configured, else the generator.
std::vector<ConsumerDemand> trial_demands(ScenarioConfig const &config, std::size_t trial);

enum class TrialStatus
{
  Ok,
  Unsatisfied,
  Infeasible,
};

std::string_view to_string(TrialStatus status) noexcept;

struct TrialResult
{
  std::size_t                 trial  = 0;
  TrialStatus                 status = TrialStatus::Ok;
  SystemReport                system;
  std::vector<ConsumerReport> consumers;
  std::size_t                 rounds = 0;
  SessionStatus               session_status = SessionStatus::SupplyExhausted;
  /// |allocated + leftover - sum(cut)|, kWh.
  double                      conservation_error = 0.0;
  /// Largest |obtained - demand| over consumers, kWh.
  double                      max_demand_gap = 0.0;
  std::vector<TraceRow>       trace;
};

struct ScenarioResult
{
  std::string              name;
  ValuationKind            valuation = ValuationKind::US;
  double                   cut       = 0.0;
  std::vector<TrialResult> trials;
  /// Slots (1-based) where a heavier baseline slot is priced below a
  /// lighter one, in any trial.
  std::vector<std::size_t> price_warnings;
};

struct SummaryRow
{
  std::string scenario;
  std::string metric;
  MeanCi      value;
};

struct ExperimentResult
{
  std::vector<ScenarioResult> scenarios;
  std::vector<SummaryRow>     summary;
};

struct ExperimentOptions
{
  bool record_trace = false;
};

std::string scenario_name(ValuationKind kind, double cut);

/// Runs every (valuation, cut, trial) combination. Trials share demands
/// across cuts and distributions so comparisons between scenarios are paired.
ExperimentResult run_experiment(ScenarioConfig const &config, ExperimentOptions const &options = {});

/// Trial means and 95% half-widths of system figures and of per-alpha
/// consumer aggregates (metric names `alpha_<a>.<field>`).
std::vector<SummaryRow> summarize(ScenarioResult const &scenario);

/// Group -> per-trial means of a consumer field, for feasible trials.
std::map<double, std::vector<double>> alpha_group_samples(ScenarioResult const &scenario,
                                                          double ConsumerReport::*field);

void write_consumer_report(std::ostream &out, std::span<ScenarioResult const> scenarios);
void write_system_report(std::ostream &out, std::span<ScenarioResult const> scenarios);
void write_summary(std::ostream &out, std::span<SummaryRow const> rows);

/// Writes every CSV, trace and chart file into `dir`, creating it.
void write_outputs(ExperimentResult const &result, std::filesystem::path const &dir);

}  // namespace gridauction
