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
#include "gridauction/pricing.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gridauction {

/// Shape of the synthetic residential profile. Slot windows are 1-based and
/// inclusive.
struct GeneratorParams
{
  double      base_min      = 0.2;
  double      base_max      = 0.6;
  std::size_t morning_first = 6;
  std::size_t morning_last  = 9;
  double      morning_min   = 0.3;
  double      morning_max   = 0.9;
  std::size_t evening_first = 18;
  std::size_t evening_last  = 21;
  double      evening_min   = 1.5;
  double      evening_max   = 2.6;
  /// Share of a bump's magnitude that spills into each adjacent slot.
  double shoulder = 0.5;
};

enum class CostForm
{
  Experiment,
  Quadratic,
};

struct CostParams
{
  CostForm form = CostForm::Experiment;
  double   q1   = 100.0;
  double   q2   = 1000.0;
  double   c1   = 1.0;
  double   c2   = 0.0;
  double   c3   = 0.0;
};

struct ScenarioConfig
{
  std::size_t                population  = 100;
  std::size_t                slot_count  = 24;
  std::vector<double>        cut_percentages{0.1, 0.2, 0.3, 0.4, 0.5};
  CostParams                 cost;
  std::vector<ValuationKind> valuations{ValuationKind::US};
  double                     guarantee  = 0.1;
  std::size_t                trials     = 10;
  std::uint64_t              seed       = 1;
  std::size_t                round_cap  = 1000;
  std::size_t                threads    = 0;  ///< 0 picks the hardware count
  std::filesystem::path      output_dir = "out";
  std::optional<std::filesystem::path> demands_csv;
  GeneratorParams                      generator;

  /// Throws ConfigError on the first broken constraint.
  void validate() const;
};

/// The cost model a config describes, for a population of `population`.
CostModel make_cost_model(CostParams const &params, std::size_t population);

/// Parses the JSON config format documented in the README. Unknown keys are
/// errors. Relative `demands_csv` paths resolve against `base_dir`.
ScenarioConfig parse_config(std::string const &text, std::filesystem::path const &base_dir = {});
ScenarioConfig load_config(std::filesystem::path const &path);

}  // namespace gridauction
