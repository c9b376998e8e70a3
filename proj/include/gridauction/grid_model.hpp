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
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridauction {

/// Absolute tolerance for energy comparisons, in kWh.
inline constexpr double kEnergyEpsilon = 1e-9;

/// Raised when inputs disagree on shape (slot counts, row widths).
class StructuralError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the peak-to-average ratio of an all-zero vector is requested.
class UndefinedParError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Raised for inconsistent scenario or guarantee configuration.
class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A day split into uniform slots. Slots are numbered 1..slot_count in
/// messages; storage is 0-based.
class TimeGrid
{
public:
  explicit TimeGrid(std::size_t slot_count);

  std::size_t slot_count() const noexcept
  {
    return slot_count_;
  }

  bool operator==(TimeGrid const &) const = default;

private:
  std::size_t slot_count_;
};

/// Non-negative per-slot energy quantities (kWh). Immutable once built.
class LoadVector
{
public:
  LoadVector() = default;
  explicit LoadVector(std::vector<double> values);
  LoadVector(std::initializer_list<double> values);

  static LoadVector zeros(std::size_t slot_count);

  std::size_t size() const noexcept
  {
    return values_.size();
  }
  double operator[](std::size_t slot) const noexcept
  {
    return values_[slot];
  }
  std::span<double const> values() const noexcept
  {
    return values_;
  }
  TimeGrid grid() const
  {
    return TimeGrid{values_.size()};
  }

  auto begin() const noexcept
  {
    return values_.begin();
  }
  auto end() const noexcept
  {
    return values_.end();
  }

  bool operator==(LoadVector const &) const = default;

private:
  std::vector<double> values_;
};

struct ConsumerDemand
{
  std::string consumer_id;
  LoadVector  demand;
};

double total_load(LoadVector const &v) noexcept;

double peak_load(LoadVector const &v) noexcept;

/// Slot-wise sum over consumers. An empty population yields zeros over
/// `slot_count` slots; a non-empty one must agree on its grid.
LoadVector aggregate(std::span<ConsumerDemand const> demands, std::size_t slot_count);

/// slot_count * max / sum. Throws UndefinedParError when the total is zero.
double par(LoadVector const &v);

// CSV rows: `id,slot_1,...,slot_N`. Numbers are written shortest-round-trip.
void write_load_csv(std::ostream &out, std::span<ConsumerDemand const> rows);
std::vector<ConsumerDemand> read_load_csv(std::istream &in);

std::string format_number(double value);

}  // namespace gridauction
