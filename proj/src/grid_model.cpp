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

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gridauction {

TimeGrid::TimeGrid(std::size_t slot_count)
  : slot_count_{slot_count}
{
  if (slot_count < 2)
  {
    throw StructuralError("time grid needs at least 2 slots, got " + std::to_string(slot_count));
  }
}

LoadVector::LoadVector(std::vector<double> values)
  : values_{std::move(values)}
{
  for (std::size_t t = 0; t < values_.size(); ++t)
  {
    if (!(values_[t] >= 0.0) || !std::isfinite(values_[t]))
    {
      throw std::invalid_argument("load at slot " + std::to_string(t + 1) +
                                  " must be a finite non-negative kWh value");
    }
  }
}

LoadVector::LoadVector(std::initializer_list<double> values)
  : LoadVector(std::vector<double>(values))
{}

LoadVector LoadVector::zeros(std::size_t slot_count)
{
  return LoadVector(std::vector<double>(slot_count, 0.0));
}

double total_load(LoadVector const &v) noexcept
{
  return std::accumulate(v.begin(), v.end(), 0.0);
}

double peak_load(LoadVector const &v) noexcept
{
  return v.size() == 0 ? 0.0 : *std::max_element(v.begin(), v.end());
}

LoadVector aggregate(std::span<ConsumerDemand const> demands, std::size_t slot_count)
{
  std::vector<double> sum(slot_count, 0.0);
  for (auto const &d : demands)
  {
    if (d.demand.size() != slot_count)
    {
      throw StructuralError("consumer '" + d.consumer_id + "' has " +
                            std::to_string(d.demand.size()) + " slots, expected " +
                            std::to_string(slot_count));
    }
    for (std::size_t t = 0; t < slot_count; ++t)
    {
      sum[t] += d.demand[t];
    }
  }
  return LoadVector(std::move(sum));
}

double par(LoadVector const &v)
{
  double const total = total_load(v);
  if (total <= 0.0)
  {
    throw UndefinedParError("PAR is undefined for a load vector with zero total");
  }
  return static_cast<double>(v.size()) * peak_load(v) / total;
}

std::string format_number(double value)
{
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

void write_load_csv(std::ostream &out, std::span<ConsumerDemand const> rows)
{
  std::size_t const width = rows.empty() ? 0 : rows.front().demand.size();
  out << "consumer_id";
  for (std::size_t t = 1; t <= width; ++t)
  {
    out << ",slot_" << t;
  }
  out << '\n';
  for (auto const &row : rows)
  {
    if (row.demand.size() != width)
    {
      throw StructuralError("CSV rows must share one slot count");
    }
    out << row.consumer_id;
    for (double x : row.demand)
    {
      out << ',' << format_number(x);
    }
    out << '\n';
  }
}

namespace {

std::vector<std::string> split_row(std::string const &line)
{
  std::vector<std::string> cells;
  std::stringstream        ss(line);
  std::string              cell;
  while (std::getline(ss, cell, ','))
  {
    // trim spaces and a trailing CR
    auto const first = cell.find_first_not_of(" \t\r");
    auto const last  = cell.find_last_not_of(" \t\r");
    cells.push_back(first == std::string::npos ? "" : cell.substr(first, last - first + 1));
  }
  return cells;
}

double parse_number(std::string const &cell, std::size_t line_no)
{
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size())
  {
    throw StructuralError("line " + std::to_string(line_no) + ": '" + cell + "' is not a number");
  }
  return value;
}

}  // namespace

std::vector<ConsumerDemand> read_load_csv(std::istream &in)
{
  std::vector<ConsumerDemand> rows;
  std::string                 line;
  std::size_t                 line_no = 0;
  std::size_t                 width   = 0;
  while (std::getline(in, line))
  {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
    {
      continue;
    }
    auto cells = split_row(line);
    if (line_no == 1)
    {
      if (cells.size() < 3 || cells.front() != "consumer_id")
      {
        throw StructuralError("CSV header must be consumer_id,slot_1,...,slot_N");
      }
      width = cells.size() - 1;
      continue;
    }
    if (cells.size() != width + 1)
    {
      throw StructuralError("line " + std::to_string(line_no) + " has " +
                            std::to_string(cells.size() - 1) + " slots, expected " +
                            std::to_string(width));
    }
    std::vector<double> values;
    values.reserve(width);
    for (std::size_t t = 1; t < cells.size(); ++t)
    {
      values.push_back(parse_number(cells[t], line_no));
    }
    rows.push_back({cells.front(), LoadVector(std::move(values))});
  }
  if (line_no == 0)
  {
    throw StructuralError("empty load CSV");
  }
  return rows;
}

}  // namespace gridauction
