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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gridauction {

struct ChartSeries
{
  std::string                            name;
  std::vector<std::pair<double, double>> points;
};

struct ChartLabels
{
  std::string title;
  std::string x_axis;
  std::string y_axis;
};

// Static SVG line chart. NaN points are skipped.
void render_line_chart(std::ostream &out, ChartLabels const &labels,
                       std::span<ChartSeries const> series);
void write_line_chart(std::filesystem::path const &path, ChartLabels const &labels,
                      std::span<ChartSeries const> series);

}  // namespace gridauction
