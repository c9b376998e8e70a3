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

#include "gridauction/par_cut.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace gridauction {

CutPercentage::CutPercentage(double c)
  : c_{c}
{
  if (!(c > 0.0 && c <= 1.0))
  {
    throw std::invalid_argument("cut percentage must lie in (0, 1], got " + format_number(c));
  }
}

double target_peak(CutPercentage c, LoadVector const &load)
{
  return (1.0 - c.value()) * peak_load(load);
}

namespace {

// Moves up to `excess` from `from` into `to`, never past `ceiling`.
// Returns the amount moved. The source of a move is always the over-peak
// slot being drained, whichever way the helper is written.
double shift_into(std::vector<double> &load, std::size_t from, std::size_t to, double excess,
                  double ceiling)
{
  double const room = ceiling - load[to];
  if (room <= 0.0)
  {
    return 0.0;
  }
  double const moved = std::min(excess, room);
  load[from] -= moved;
  load[to] += moved;
  return moved;
}

}  // namespace

CutResult par_cut(CutPercentage c, LoadVector const &load)
{
  if (total_load(load) <= 0.0)
  {
    throw UndefinedParError("cannot cut the peak of an all-zero load");
  }

  double const ceiling = target_peak(c, load);
  auto const   n       = static_cast<std::ptrdiff_t>(load.size());

  std::vector<double> cut(load.begin(), load.end());

  for (std::ptrdiff_t i = 0; i < n; ++i)
  {
    if (cut[i] <= ceiling + kEnergyEpsilon)
    {
      continue;
    }
    double excess = cut[i] - ceiling;
    for (std::ptrdiff_t d = 1; excess > kEnergyEpsilon; ++d)
    {
      bool const has_after  = i + d < n;
      bool const has_before = i - d >= 0;
      if (!has_after && !has_before)
      {
        return CutResult::infeasible();
      }
      if (has_after)
      {
        excess -= shift_into(cut, i, i + d, excess, ceiling);
      }
      if (excess > kEnergyEpsilon && has_before)
      {
        excess -= shift_into(cut, i, i - d, excess, ceiling);
      }
    }
  }

  // sub-epsilon dust can leave a value a hair below zero
  for (auto &x : cut)
  {
    x = std::max(x, 0.0);
  }
  return CutResult::success(LoadVector(std::move(cut)));
}

bool is_feasible(CutPercentage c, LoadVector const &load)
{
  if (total_load(load) <= 0.0)
  {
    throw UndefinedParError("cannot cut the peak of an all-zero load");
  }
  return total_load(load) <=
         target_peak(c, load) * static_cast<double>(load.size()) + kEnergyEpsilon;
}

}  // namespace gridauction
