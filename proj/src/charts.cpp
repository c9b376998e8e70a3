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

#include "gridauction/charts.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace gridauction {

namespace {

constexpr double kWidth  = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft   = 80.0;
constexpr double kRight  = 170.0;
constexpr double kTop    = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<char const *, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                               "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v, int precision = 2)
{
  std::array<char, 64> buf{};
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, precision);
  return std::string(buf.data(), end);
}

std::string tick_label(double v)
{
  std::array<char, 64> buf{};
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 4);
  return std::string(buf.data(), end);
}

std::string escape(std::string const &s)
{
  std::string out;
  for (char c : s)
  {
    switch (c)
    {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    default:
      out += c;
    }
  }
  return out;
}

struct Range
{
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void take(double v)
  {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void settle()
  {
    if (!std::isfinite(lo))
    {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12)
    {
      double const pad = std::abs(lo) > 0.0 ? std::abs(lo) * 0.05 : 0.5;
      lo -= pad;
      hi += pad;
    }
  }
};

}  // namespace

void render_line_chart(std::ostream &out, ChartLabels const &labels,
                       std::span<ChartSeries const> series)
{
  Range xr;
  Range yr;
  for (auto const &s : series)
  {
    for (auto const &[x, y] : s.points)
    {
      if (std::isfinite(x) && std::isfinite(y))
      {
        xr.take(x);
        yr.take(y);
      }
    }
  }
  xr.settle();
  yr.settle();

  double const plot_w = kWidth - kLeft - kRight;
  double const plot_h = kHeight - kTop - kBottom;
  auto const   px     = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto const   py     = [&](double y) { return kTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(labels.title) << "</text>\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int k = 0; k <= kTicks; ++k)
  {
    double const fx = xr.lo + (xr.hi - xr.lo) * k / kTicks;
    double const fy = yr.lo + (yr.hi - yr.lo) * k / kTicks;
    out << "<line x1=\"" << num(px(fx)) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\""
        << num(px(fx)) << "\" y2=\"" << num(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(px(fx)) << "\" y=\"" << num(kTop + plot_h + 18)
        << "\" text-anchor=\"middle\">" << tick_label(fx) << "</text>\n";
    out << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(fy)) << "\" x2=\""
        << num(kLeft + plot_w) << "\" y2=\"" << num(py(fy)) << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(fy) + 4)
        << "\" text-anchor=\"end\">" << tick_label(fy) << "</text>\n";
  }
  out << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
      << "\" text-anchor=\"middle\">" << escape(labels.x_axis) << "</text>\n";
  out << "<text transform=\"translate(18," << num(kTop + plot_h / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(labels.y_axis) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i)
  {
    char const *colour = kPalette[i % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    for (auto const &[x, y] : series[i].points)
    {
      if (std::isfinite(x) && std::isfinite(y))
      {
        out << num(px(x)) << ',' << num(py(y)) << ' ';
      }
    }
    out << "\"/>\n";
    for (auto const &[x, y] : series[i].points)
    {
      if (std::isfinite(x) && std::isfinite(y))
      {
        out << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"3\" fill=\""
            << colour << "\"/>\n";
      }
    }
    double const ly = kTop + 10 + 18.0 * static_cast<double>(i);
    out << "<line x1=\"" << num(kWidth - kRight + 15) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(kWidth - kRight + 35) << "\" y2=\"" << num(ly) << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(kWidth - kRight + 40) << "\" y=\"" << num(ly + 4) << "\">"
        << escape(series[i].name) << "</text>\n";
  }
  out << "</svg>\n";
}

void write_line_chart(std::filesystem::path const &path, ChartLabels const &labels,
                      std::span<ChartSeries const> series)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw std::runtime_error("cannot write chart " + path.string());
  }
  render_line_chart(out, labels, series);
}

}  // namespace gridauction
