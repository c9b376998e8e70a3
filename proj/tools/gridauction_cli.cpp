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
#include "gridauction/config.hpp"
#include "gridauction/experiment.hpp"
#include "gridauction/par_cut.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gridauction;

namespace {

constexpr int kExitOk         = 0;
constexpr int kExitUsage      = 1;
constexpr int kExitInfeasible = 2;

std::vector<Bid> read_bid_book(std::istream &in)
{
  std::vector<Bid> bids;
  std::string      line;
  std::size_t      line_no = 0;
  while (std::getline(in, line))
  {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
    {
      continue;
    }
    if (line_no == 1)
    {
      if (line.rfind("agent_id", 0) != 0)
      {
        throw ConfigError("bid book header must be agent_id,quantity,valuation");
      }
      continue;
    }
    std::stringstream ss(line);
    std::string       id;
    std::string       qty;
    std::string       val;
    if (!std::getline(ss, id, ',') || !std::getline(ss, qty, ',') || !std::getline(ss, val))
    {
      throw ConfigError("line " + std::to_string(line_no) + ": expected three columns");
    }
    try
    {
      bids.push_back({std::stoul(id), std::stod(qty), std::stod(val)});
    }
    catch (std::exception const &)
    {
      throw ConfigError("line " + std::to_string(line_no) + ": malformed bid");
    }
  }
  return bids;
}

int run_cut(std::string const &input, double c)
{
  std::ifstream in(input);
  if (!in)
  {
    throw ConfigError("cannot open " + input);
  }
  auto const rows  = read_load_csv(in);
  auto const width = rows.empty() ? 0 : rows.front().demand.size();
  LoadVector const load = rows.size() == 1 ? rows.front().demand : aggregate(rows, width);

  CutResult const result = par_cut(CutPercentage(c), load);
  if (!result.feasible())
  {
    std::cout << "INFEASIBLE\n";
    std::cerr << "total " << format_number(total_load(load)) << " kWh exceeds "
              << format_number(target_peak(CutPercentage(c), load)) << " kWh x " << load.size()
              << " slots\n";
    return kExitInfeasible;
  }
  ConsumerDemand const out{"cut", result.load()};
  write_load_csv(std::cout, std::span(&out, 1));
  std::cerr << "par_before=" << format_number(par(load))
            << " par_after=" << format_number(par(result.load())) << '\n';
  return kExitOk;
}

int run_auction(std::string const &input, double supply, double reserve, bool walk_away)
{
  std::ifstream in(input);
  if (!in)
  {
    throw ConfigError("cannot open " + input);
  }
  auto const bids = read_bid_book(in);
  auto const policy = [walk_away](Bid const &, double, double) { return !walk_away; };
  SlotOutcome const outcome = clear_slot(bids, supply, reserve, policy);

  std::cout << "clearing_price," << format_number(outcome.clearing_price) << '\n';
  std::cout << "leftover_supply," << format_number(outcome.leftover_supply) << '\n';
  std::cout << "agent_id,won_qty\n";
  for (auto const &w : outcome.winners)
  {
    std::cout << w.agent_id << ',' << format_number(w.quantity) << '\n';
  }
  for (auto id : outcome.walkaways)
  {
    std::cout << "walkaway," << id << '\n';
  }
  for (auto id : outcome.rejected)
  {
    std::cout << "rejected," << id << '\n';
  }
  return kExitOk;
}

ScenarioConfig configured(std::string const &path, std::optional<std::uint64_t> seed,
                          std::optional<std::size_t> trials, std::optional<std::string> out)
{
  ScenarioConfig cfg = load_config(path);
  if (seed)
  {
    cfg.seed = *seed;
  }
  if (trials)
  {
    cfg.trials = *trials;
  }
  if (out)
  {
    cfg.output_dir = *out;
  }
  cfg.validate();
  return cfg;
}

int run_validate(ScenarioConfig const &cfg)
{
  // every (trial, cut) the run would see, without running auctions
  CostModel const model = make_cost_model(cfg.cost, cfg.population);
  std::size_t     infeasible = 0;
  for (std::size_t k = 0; k < cfg.trials; ++k)
  {
    auto const demands  = trial_demands(cfg, k);
    auto const total    = aggregate(demands, cfg.slot_count);
    auto const reserves = reserve_prices(model, total);
    for (double c : cfg.cut_percentages)
    {
      auto const cut = par_cut(CutPercentage(c), total);
      if (!cut.feasible())
      {
        ++infeasible;
        continue;
      }
      check_supply_guarantee(total, cut.load(), GuaranteeConfig{cfg.guarantee}, demands.size());
    }
    auto const warn = price_monotonicity_violations(total, reserves);
    if (!warn.empty())
    {
      std::cerr << "warning: trial " << k << ": " << warn.size()
                << " slot(s) priced below a lighter slot\n";
    }
  }
  std::cout << "config ok (" << infeasible << " infeasible trial/cut combinations)\n";
  return kExitOk;
}

int run_simulate(ScenarioConfig const &cfg, bool trace)
{
  ExperimentOptions opts;
  opts.record_trace = trace;
  auto const result = run_experiment(cfg, opts);
  write_outputs(result, cfg.output_dir);
  for (auto const &s : result.scenarios)
  {
    std::size_t ok = 0;
    std::size_t infeasible = 0;
    for (auto const &t : s.trials)
    {
      ok += t.status == TrialStatus::Ok;
      infeasible += t.status == TrialStatus::Infeasible;
    }
    std::cout << s.name << ": " << ok << " satisfied, " << infeasible << " infeasible of "
              << s.trials.size() << " trials\n";
    if (!s.price_warnings.empty())
    {
      std::cerr << "warning: " << s.name << ": reserve price not increasing with load at "
                << s.price_warnings.size() << " slot(s)\n";
    }
  }
  std::cout << "wrote " << cfg.output_dir.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Peak cutting and multiunit load auction simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t>   trials;
  std::optional<std::string>   out_dir;
  bool                         trace = false;

  auto *cut = app.add_subcommand("cut", "Cut the peak of a CSV load vector");
  std::string cut_input;
  double      cut_c = 0.0;
  cut->add_option("load", cut_input, "CSV with consumer_id,slot_1..slot_N rows")->required();
  cut->add_option("-c,--cut", cut_c, "cut percentage in (0, 1]")->required();

  auto *auction = app.add_subcommand("auction", "Clear one slot from a CSV bid book");
  std::string bids_input;
  double      supply    = 0.0;
  double      reserve   = 0.0;
  bool        walk_away = false;
  auction->add_option("bids", bids_input, "CSV with agent_id,quantity,valuation rows")->required();
  auction->add_option("--supply", supply, "kWh for sale")->required();
  auction->add_option("--reserve", reserve, "reserve price per kWh");
  auction->add_flag("--walk-away", walk_away, "the partially filled winner declines");

  auto *simulate = app.add_subcommand("simulate", "Run the full experiment from a config file");
  auto *validate = app.add_subcommand("validate", "Check a config and its guarantee precondition");
  for (auto *sub : {simulate, validate})
  {
    sub->add_option("--config", config_path, "JSON scenario config")->required();
    sub->add_option("--seed", seed, "override the config seed");
    sub->add_option("--trials", trials, "override the number of trials");
    sub->add_option("--out", out_dir, "override the output directory");
  }
  simulate->add_flag("--trace", trace, "write a per-bid trace CSV per trial");

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return kExitUsage;
  }

  try
  {
    if (cut->parsed())
    {
      return run_cut(cut_input, cut_c);
    }
    if (auction->parsed())
    {
      return run_auction(bids_input, supply, reserve, walk_away);
    }
    ScenarioConfig const cfg = configured(config_path, seed, trials, out_dir);
    if (validate->parsed())
    {
      return run_validate(cfg);
    }
    return run_simulate(cfg, trace);
  }
  catch (std::exception const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
