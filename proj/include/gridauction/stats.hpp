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
#include <span>

namespace gridauction {

struct MeanCi
{
  double      mean          = 0.0;
  double      ci95_halfwidth = 0.0;  ///< NaN with fewer than two samples
  std::size_t samples       = 0;

  double lower() const noexcept
  {
    return mean - ci95_halfwidth;
  }
  double upper() const noexcept
  {
    return mean + ci95_halfwidth;
  }
};

/// Two-sided 95% Student-t quantile with `dof` degrees of freedom.
double student_t_975(std::size_t dof);

/// Sample mean with a Student-t 95% half-width on n - 1 degrees of freedom.
MeanCi mean_ci95(std::span<double const> samples);

}  // namespace gridauction
