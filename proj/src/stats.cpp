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

#include "gridauction/stats.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gridauction {

double student_t_975(std::size_t dof)
{
  if (dof == 0)
  {
    throw std::invalid_argument("Student-t needs at least one degree of freedom");
  }
  boost::math::students_t dist(static_cast<double>(dof));
  return boost::math::quantile(dist, 0.975);
}

MeanCi mean_ci95(std::span<double const> samples)
{
  MeanCi r;
  r.samples = samples.size();
  if (samples.empty())
  {
    r.mean           = std::numeric_limits<double>::quiet_NaN();
    r.ci95_halfwidth = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  double sum = 0.0;
  for (double x : samples)
  {
    sum += x;
  }
  r.mean = sum / static_cast<double>(samples.size());
  if (samples.size() < 2)
  {
    r.ci95_halfwidth = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  double ss = 0.0;
  for (double x : samples)
  {
    ss += (x - r.mean) * (x - r.mean);
  }
  double const n  = static_cast<double>(samples.size());
  double const sd = std::sqrt(ss / (n - 1.0));
  r.ci95_halfwidth = student_t_975(samples.size() - 1) * sd / std::sqrt(n);
  return r;
}

}  // namespace gridauction
