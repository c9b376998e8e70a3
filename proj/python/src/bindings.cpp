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

#include "gridauction/auction.hpp"
#include "gridauction/experiment.hpp"
#include "gridauction/grid_model.hpp"
#include "gridauction/metrics.hpp"
#include "gridauction/par_cut.hpp"
#include "gridauction/pricing.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <tuple>

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace gridauction;

namespace {

py::dict outcome_to_dict(SlotOutcome const &o)
{
  py::list winners;
  for (auto const &w : o.winners)
  {
    winners.append(py::make_tuple(w.agent_id, w.quantity));
  }
  py::dict d;
  d["winners"]         = winners;
  d["clearing_price"]  = o.clearing_price;
  d["leftover_supply"] = o.leftover_supply;
  d["walkaways"]       = o.walkaways;
  d["rejected"]        = o.rejected;
  return d;
}

py::dict experiment_to_dict(ExperimentResult const &result)
{
  py::dict scenarios;
  for (auto const &row : result.summary)
  {
    py::str key(row.scenario);
    if (!scenarios.contains(key))
    {
      scenarios[key] = py::dict();
    }
    scenarios[key].cast<py::dict>()[py::str(row.metric)] =
        py::make_tuple(row.value.mean, row.value.ci95_halfwidth);
  }
  return scenarios;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Peak cutting and multiunit load auction simulator";

  py::register_exception<UndefinedParError>(m, "UndefinedParError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def(
      "total_load", [](std::vector<double> v) { return total_load(LoadVector(std::move(v))); },
      py::arg("load"), "Sum of a per-slot load vector (kWh).");
  m.def(
      "par", [](std::vector<double> v) { return par(LoadVector(std::move(v))); }, py::arg("load"),
      "Peak-to-average ratio. Raises ValueError on an all-zero load.");
  m.def(
      "aggregate",
      [](std::vector<std::vector<double>> rows) {
        std::vector<ConsumerDemand> demands;
        std::size_t const width = rows.empty() ? 0 : rows.front().size();
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
          demands.push_back({std::to_string(i), LoadVector(std::move(rows[i]))});
        }
        auto const sum = aggregate(demands, width);
        return std::vector<double>(sum.begin(), sum.end());
      },
      py::arg("demands"));
  m.def(
      "par_cut",
      [](std::vector<double> v, double c) -> std::optional<std::vector<double>> {
        auto const r = par_cut(CutPercentage(c), LoadVector(std::move(v)));
        if (!r.feasible())
        {
          return std::nullopt;
        }
        return std::vector<double>(r.load().begin(), r.load().end());
      },
      py::arg("load"), py::arg("c"),
      "Cut the peak by fraction c. Returns the new load, or None when infeasible.");
  m.def(
      "is_feasible",
      [](std::vector<double> v, double c) {
        return is_feasible(CutPercentage(c), LoadVector(std::move(v)));
      },
      py::arg("load"), py::arg("c"));
  m.def(
      "clear_slot",
      [](std::vector<std::tuple<AgentId, double, double>> const &book, double supply,
         double reserve, bool walk_away) {
        std::vector<Bid> bids;
        for (auto const &[id, qty, val] : book)
        {
          bids.push_back({id, qty, val});
        }
        auto const policy = [walk_away](Bid const &, double, double) { return !walk_away; };
        return outcome_to_dict(clear_slot(bids, supply, reserve, policy));
      },
      py::arg("bids"), py::arg("supply"), py::arg("reserve") = 0.0, py::arg("walk_away") = false,
      "Uniform-price clearing of one slot. Bids are (agent_id, quantity, valuation).");

  py::class_<CostModel>(m, "CostModel")
      .def("__call__", [](CostModel const &c, double load) { return c(load); });
  m.def(
      "experiment_cost",
      [](double q1, double q2, std::size_t population) {
        return CostModel(ExperimentCost{q1, q2, population});
      },
      py::arg("q1") = 100.0, py::arg("q2") = 1000.0, py::arg("population") = 1);
  m.def(
      "quadratic_cost",
      [](double c1, double c2, double c3) { return CostModel(QuadraticCost{c1, c2, c3}); },
      py::arg("c1"), py::arg("c2") = 0.0, py::arg("c3") = 0.0);
  m.def(
      "reserve_prices",
      [](CostModel const &model, std::vector<double> v) {
        return reserve_prices(model, LoadVector(std::move(v)));
      },
      py::arg("model"), py::arg("baseline"));
  m.def(
      "system_cost",
      [](CostModel const &model, std::vector<double> v) {
        return system_cost(model, LoadVector(std::move(v)));
      },
      py::arg("model"), py::arg("load"));
  m.def(
      "shift_percentage",
      [](std::vector<double> original, std::vector<double> obtained) {
        return shift_percentage(LoadVector(std::move(original)), LoadVector(std::move(obtained)));
      },
      py::arg("original"), py::arg("obtained"));
  m.def(
      "run_experiment",
      [](std::string const &config_json, std::optional<std::string> out_dir) {
        ScenarioConfig const cfg = parse_config(config_json);
        ExperimentResult     result;
        {
          py::gil_scoped_release release;
          result = run_experiment(cfg);
          if (out_dir)
          {
            write_outputs(result, *out_dir);
          }
        }
        return experiment_to_dict(result);
      },
      py::arg("config_json"), py::arg("out_dir") = py::none(),
      "Run a JSON-configured experiment; returns {scenario: {metric: (mean, ci95)}}.");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
