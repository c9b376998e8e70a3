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

#include <optional>

namespace gridauction {

/// Fraction in (0, 1] by which the supply peak is lowered.
class CutPercentage
{
public:
  explicit CutPercentage(double c);

  double value() const noexcept
  {
    return c_;
  }

private:
  double c_;
};

/// Outcome of a peak cut. An infeasible cut is an ordinary result, not an error.
class CutResult
{
public:
  static CutResult infeasible()
  {
    return CutResult{};
  }
  static CutResult success(LoadVector load)
  {
    CutResult r;
    r.load_ = std::move(load);
    return r;
  }

  bool feasible() const noexcept
  {
    return load_.has_value();
  }
  /// Throws std::bad_optional_access when infeasible.
  LoadVector const &load() const
  {
    return load_.value();
  }

private:
  std::optional<LoadVector> load_;
};

/// The peak level a cut aims for: (1 - c) * max L(t).
double target_peak(CutPercentage c, LoadVector const &load);

/// Moves every slot's excess above the target peak into the nearest slots
/// with spare room, trying slot i+d before i-d at each radius d = 1, 2, ...
/// Receiving slots are filled up to the target peak and no further. Over-peak
/// slots are handled in ascending order. Total load is conserved.
///
/// Returns CutResult::infeasible() when the excess cannot be placed anywhere.
/// Throws UndefinedParError on an all-zero load.
CutResult par_cut(CutPercentage c, LoadVector const &load);

/// Closed form of the success condition: sum(L) <= (1 - c) * max(L) * |T|
/// (within kEnergyEpsilon).
bool is_feasible(CutPercentage c, LoadVector const &load);

}  // namespace gridauction
