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

#include "gridauction/experiment.hpp"

#include "gridauction/charts.hpp"
#include "gridauction/par_cut.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

namespace gridauction {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fixed(double value, int precision)
{
  if (std::isnan(value))
  {
    return "nan";
  }
  std::array<char, 64> buf{};
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, precision);
  return std::string(buf.data(), end);
}

std::string general(double value)
{
  if (std::isnan(value))
  {
    return "nan";
  }
  std::array<char, 64> buf{};
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 10);
  return std::string(buf.data(), end);
}

std::string alpha_label(double alpha)
{
  return fixed(alpha, 1);
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial, RngStream stream, std::uint64_t tag)
{
  std::vector<std::uint32_t> words;
  for (std::uint64_t part :
       {seed, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(stream), tag})
  {
    words.push_back(static_cast<std::uint32_t>(part));
    words.push_back(static_cast<std::uint32_t>(part >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

std::vector<ConsumerDemand> generate_demands(ScenarioConfig const &config, std::mt19937_64 &rng)
{
  auto const &g     = config.generator;
  auto const  slots = config.slot_count;
  std::size_t width = std::to_string(config.population).size();

  std::uniform_real_distribution<double> base(g.base_min, g.base_max);
  std::uniform_real_distribution<double> morning(g.morning_min, g.morning_max);
  std::uniform_real_distribution<double> evening(g.evening_min, g.evening_max);
  std::uniform_int_distribution<std::size_t> morning_at(g.morning_first - 1, g.morning_last - 1);
  std::uniform_int_distribution<std::size_t> evening_at(g.evening_first - 1, g.evening_last - 1);

  auto const add_bump = [&](std::vector<double> &load, std::size_t centre, double magnitude) {
    load[centre] += magnitude;
    if (centre > 0)
    {
      load[centre - 1] += g.shoulder * magnitude;
    }
    if (centre + 1 < load.size())
    {
      load[centre + 1] += g.shoulder * magnitude;
    }
  };

  std::vector<ConsumerDemand> demands;
  demands.reserve(config.population);
  for (std::size_t i = 0; i < config.population; ++i)
  {
    std::vector<double> load(slots);
    for (auto &x : load)
    {
      x = base(rng);
    }
    std::size_t const m_at = morning_at(rng);
    double const      m    = morning(rng);
    std::size_t const e_at = evening_at(rng);
    double const      e    = evening(rng);
    add_bump(load, m_at, m);
    add_bump(load, e_at, e);

    std::string id = std::to_string(i + 1);
    id.insert(0, width - id.size(), '0');
    demands.push_back({"c" + id, LoadVector(std::move(load))});
  }
  return demands;
}

std::vector<ConsumerDemand> trial_demands(ScenarioConfig const &config, std::size_t trial)
{
  if (config.demands_csv)
  {
    std::ifstream in(*config.demands_csv);
    if (!in)
    {
      throw ConfigError("cannot open demands file " + config.demands_csv->string());
    }
    auto rows = read_load_csv(in);
    if (rows.size() != config.population)
    {
      throw ConfigError("demands file has " + std::to_string(rows.size()) +
                        " consumers but population is " + std::to_string(config.population));
    }
    for (auto const &r : rows)
    {
      if (r.demand.size() != config.slot_count)
      {
        throw ConfigError("demands file rows must have slot_count = " +
                          std::to_string(config.slot_count) + " slots");
      }
      if (total_load(r.demand) <= 0.0)
      {
        throw ConfigError("consumer '" + r.consumer_id + "' has zero total demand");
      }
    }
    return rows;
  }
  auto rng = trial_rng(config.seed, trial, RngStream::Demand);
  return generate_demands(config, rng);
}

std::string_view to_string(TrialStatus status) noexcept
{
  switch (status)
  {
  case TrialStatus::Ok:
    return "ok";
  case TrialStatus::Unsatisfied:
    return "unsatisfied";
  case TrialStatus::Infeasible:
    return "infeasible";
  }
  return "unknown";
}

std::string scenario_name(ValuationKind kind, double cut)
{
  double const pct = std::round(cut * 1e4) / 1e2;
  return std::string(to_string(kind)) + "_c" + format_number(pct);
}

namespace {

struct TrialInputs
{
  std::vector<ConsumerDemand> demands;
  LoadVector                  aggregate;
  ReservePriceVector          reserves;
  std::vector<std::size_t>    price_warnings;
};

TrialResult run_trial(ScenarioConfig const &config, TrialInputs const &in,
                      std::vector<double> const &alphas, double cut_fraction, std::size_t trial,
                      bool record_trace)
{
  CostModel const model = make_cost_model(config.cost, config.population);

  TrialResult result;
  result.trial = trial;
  auto &sys    = result.system;
  sys.cut_percentage            = cut_fraction;
  sys.par_before                = par(in.aggregate);
  sys.system_cost_before        = system_cost(model, in.aggregate);
  sys.producer_revenue_baseline = baseline_cost(in.aggregate, in.reserves);

  CutResult const cut = par_cut(CutPercentage(cut_fraction), in.aggregate);
  if (!cut.feasible())
  {
    result.status                = TrialStatus::Infeasible;
    sys.par_after                = kNaN;
    sys.system_cost_after        = kNaN;
    sys.producer_revenue_auction = kNaN;
    sys.satisfied                = false;
    for (std::size_t i = 0; i < in.demands.size(); ++i)
    {
      ConsumerReport r;
      r.consumer_id     = in.demands[i].consumer_id;
      r.alpha           = alphas[i];
      r.total_demand    = total_load(in.demands[i].demand);
      r.total_obtained  = kNaN;
      r.shift_fraction  = kNaN;
      r.auction_cost    = kNaN;
      r.baseline_cost   = baseline_cost(in.demands[i].demand, in.reserves);
      r.saving_fraction = kNaN;
      result.consumers.push_back(std::move(r));
    }
    return result;
  }

  std::vector<AgentState> agents;
  agents.reserve(in.demands.size());
  for (std::size_t i = 0; i < in.demands.size(); ++i)
  {
    agents.emplace_back(i, in.demands[i].consumer_id, in.demands[i].demand, alphas[i]);
  }

  SessionOptions opts;
  opts.round_cap    = config.round_cap;
  opts.record_trace = record_trace;
  auto session = run_session(std::move(agents), cut.load(), in.reserves,
                             GuaranteeConfig{config.guarantee}, opts);

  sys.par_after                = par(cut.load());
  sys.system_cost_after        = system_cost(model, cut.load());
  sys.producer_revenue_auction = producer_revenue(session.ledger);
  sys.satisfied                = session.satisfied;

  double leftover = 0.0;
  for (double x : session.remaining)
  {
    leftover += x;
  }
  result.conservation_error =
      std::abs(session.ledger.total_allocated() + leftover - total_load(cut.load()));
  result.consumers = consumer_reports(session, in.reserves);
  for (auto const &r : result.consumers)
  {
    result.max_demand_gap = std::max(result.max_demand_gap, std::abs(r.total_obtained - r.total_demand));
  }
  result.rounds         = session.rounds();
  result.session_status = session.status;
  result.status         = session.satisfied ? TrialStatus::Ok : TrialStatus::Unsatisfied;
  result.trace          = std::move(session.trace);
  return result;
}

template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn &&fn)
{
  if (threads == 0)
  {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, count);
  if (threads <= 1)
  {
    for (std::size_t k = 0; k < count; ++k)
    {
      fn(k);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr       failure;
  std::mutex               failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w)
  {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++)
      {
        try
        {
          fn(k);
        }
        catch (...)
        {
          std::lock_guard lock(failure_mutex);
          if (!failure)
          {
            failure = std::current_exception();
          }
        }
      }
    });
  }
  for (auto &t : pool)
  {
    t.join();
  }
  if (failure)
  {
    std::rethrow_exception(failure);
  }
}

}  // namespace

ExperimentResult run_experiment(ScenarioConfig const &config, ExperimentOptions const &options)
{
  config.validate();
  CostModel const model = make_cost_model(config.cost, config.population);

  std::vector<TrialInputs> inputs(config.trials);
  parallel_for(config.trials, config.threads, [&](std::size_t k) {
    auto &in          = inputs[k];
    in.demands        = trial_demands(config, k);
    in.aggregate      = aggregate(in.demands, config.slot_count);
    in.reserves       = reserve_prices(model, in.aggregate);
    in.price_warnings = price_monotonicity_violations(in.aggregate, in.reserves);
  });

  // alphas per (trial, distribution), shared by every cut
  std::vector<std::vector<std::vector<double>>> alphas(config.valuations.size());
  for (std::size_t v = 0; v < config.valuations.size(); ++v)
  {
    ValuationDistribution const dist(config.valuations[v]);
    for (std::size_t k = 0; k < config.trials; ++k)
    {
      auto rng = trial_rng(config.seed, k, RngStream::Valuation,
                           static_cast<std::uint64_t>(config.valuations[v]));
      std::vector<double> a(config.population);
      for (auto &x : a)
      {
        x = sample_alpha(dist, rng);
      }
      alphas[v].push_back(std::move(a));
    }
  }

  ExperimentResult result;
  for (auto kind : config.valuations)
  {
    for (double c : config.cut_percentages)
    {
      ScenarioResult s;
      s.name      = scenario_name(kind, c);
      s.valuation = kind;
      s.cut       = c;
      s.trials.resize(config.trials);
      std::set<std::size_t> warned;
      for (auto const &in : inputs)
      {
        for (auto t : in.price_warnings)
        {
          warned.insert(t + 1);
        }
      }
      s.price_warnings.assign(warned.begin(), warned.end());
      result.scenarios.push_back(std::move(s));
    }
  }

  std::size_t const per_scenario = config.trials;
  std::size_t const jobs         = result.scenarios.size() * per_scenario;
  parallel_for(jobs, config.threads, [&](std::size_t job) {
    std::size_t const s = job / per_scenario;
    std::size_t const k = job % per_scenario;
    std::size_t const v = s / config.cut_percentages.size();
    auto &scenario      = result.scenarios[s];
    scenario.trials[k] =
        run_trial(config, inputs[k], alphas[v][k], scenario.cut, k, options.record_trace);
  });

  for (auto const &s : result.scenarios)
  {
    auto rows = summarize(s);
    result.summary.insert(result.summary.end(), rows.begin(), rows.end());
  }
  return result;
}

std::map<double, std::vector<double>> alpha_group_samples(ScenarioResult const &scenario,
                                                          double ConsumerReport::*field)
{
  std::map<double, std::vector<double>> groups;
  for (auto const &trial : scenario.trials)
  {
    if (trial.status == TrialStatus::Infeasible)
    {
      continue;
    }
    std::map<double, std::pair<double, std::size_t>> acc;
    for (auto const &c : trial.consumers)
    {
      auto &slot = acc[c.alpha];
      slot.first += c.*field;
      slot.second += 1;
    }
    for (auto const &[alpha, sum_count] : acc)
    {
      groups[alpha].push_back(sum_count.first / static_cast<double>(sum_count.second));
    }
  }
  return groups;
}

std::vector<SummaryRow> summarize(ScenarioResult const &scenario)
{
  std::vector<SummaryRow> rows;
  auto const add = [&](std::string metric, std::vector<double> const &samples) {
    rows.push_back({scenario.name, std::move(metric), mean_ci95(samples)});
  };

  std::vector<double> feasible;
  for (auto const &t : scenario.trials)
  {
    feasible.push_back(t.status == TrialStatus::Infeasible ? 0.0 : 1.0);
  }
  add("feasible", feasible);

  auto const system_field = [&](auto getter) {
    std::vector<double> v;
    for (auto const &t : scenario.trials)
    {
      if (t.status != TrialStatus::Infeasible)
      {
        v.push_back(getter(t));
      }
    }
    return v;
  };

  add("satisfied", system_field([](TrialResult const &t) { return t.system.satisfied ? 1.0 : 0.0; }));
  add("rounds", system_field([](TrialResult const &t) { return double(t.rounds); }));
  add("par_before", system_field([](TrialResult const &t) { return t.system.par_before; }));
  add("par_after", system_field([](TrialResult const &t) { return t.system.par_after; }));
  add("system_cost_before",
      system_field([](TrialResult const &t) { return t.system.system_cost_before; }));
  add("system_cost_after",
      system_field([](TrialResult const &t) { return t.system.system_cost_after; }));
  add("system_cost_reduction", system_field([](TrialResult const &t) {
        return 1.0 - t.system.system_cost_after / t.system.system_cost_before;
      }));
  add("producer_revenue_auction",
      system_field([](TrialResult const &t) { return t.system.producer_revenue_auction; }));
  add("producer_revenue_baseline",
      system_field([](TrialResult const &t) { return t.system.producer_revenue_baseline; }));
  add("producer_revenue_gain", system_field([](TrialResult const &t) {
        return t.system.producer_revenue_auction / t.system.producer_revenue_baseline - 1.0;
      }));

  struct Field
  {
    char const *name;
    double ConsumerReport::*member;
  };
  for (Field f : {Field{"shift_fraction", &ConsumerReport::shift_fraction},
                  Field{"auction_cost", &ConsumerReport::auction_cost},
                  Field{"baseline_cost", &ConsumerReport::baseline_cost},
                  Field{"saving_fraction", &ConsumerReport::saving_fraction}})
  {
    for (auto const &[alpha, samples] : alpha_group_samples(scenario, f.member))
    {
      add("alpha_" + alpha_label(alpha) + "." + f.name, samples);
    }
  }
  return rows;
}

void write_consumer_report(std::ostream &out, std::span<ScenarioResult const> scenarios)
{
  out << "scenario,trial,status,consumer_id,alpha,total_demand,total_obtained,shift_fraction,"
         "auction_cost,baseline_cost,saving_fraction\n";
  for (auto const &s : scenarios)
  {
    for (auto const &t : s.trials)
    {
      for (auto const &c : t.consumers)
      {
        out << s.name << ',' << t.trial << ',' << to_string(t.status) << ',' << c.consumer_id
            << ',' << alpha_label(c.alpha) << ',' << fixed(c.total_demand, 6) << ','
            << fixed(c.total_obtained, 6) << ',' << fixed(c.shift_fraction, 6) << ','
            << fixed(c.auction_cost, 6) << ',' << fixed(c.baseline_cost, 6) << ','
            << fixed(c.saving_fraction, 6) << '\n';
      }
    }
  }
}

void write_system_report(std::ostream &out, std::span<ScenarioResult const> scenarios)
{
  out << "scenario,trial,status,session_status,rounds,cut_percentage,par_before,par_after,"
         "system_cost_before,system_cost_after,producer_revenue_auction,"
         "producer_revenue_baseline,satisfied\n";
  for (auto const &s : scenarios)
  {
    for (auto const &t : s.trials)
    {
      auto const &r = t.system;
      out << s.name << ',' << t.trial << ',' << to_string(t.status) << ','
          << (t.status == TrialStatus::Infeasible ? "none" : to_string(t.session_status)) << ','
          << t.rounds << ',' << fixed(r.cut_percentage, 6) << ',' << fixed(r.par_before, 6) << ','
          << fixed(r.par_after, 6) << ',' << fixed(r.system_cost_before, 6) << ','
          << fixed(r.system_cost_after, 6) << ',' << fixed(r.producer_revenue_auction, 6) << ','
          << fixed(r.producer_revenue_baseline, 6) << ',' << (r.satisfied ? "true" : "false")
          << '\n';
    }
  }
}

void write_summary(std::ostream &out, std::span<SummaryRow const> rows)
{
  out << "scenario,metric,mean,ci95_halfwidth\n";
  for (auto const &r : rows)
  {
    out << r.scenario << ',' << r.metric << ',' << general(r.value.mean) << ','
        << general(r.value.ci95_halfwidth) << '\n';
  }
}

namespace {

void open_and_write(std::filesystem::path const &path, auto &&writer)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw ConfigError("cannot write " + path.string());
  }
  writer(out);
}

double summary_mean(ExperimentResult const &result, std::string const &scenario,
                    std::string const &metric)
{
  for (auto const &r : result.summary)
  {
    if (r.scenario == scenario && r.metric == metric)
    {
      return r.value.mean;
    }
  }
  return kNaN;
}

void write_charts(ExperimentResult const &result, std::filesystem::path const &dir)
{
  std::vector<ValuationKind> kinds;
  for (auto const &s : result.scenarios)
  {
    if (std::find(kinds.begin(), kinds.end(), s.valuation) == kinds.end())
    {
      kinds.push_back(s.valuation);
    }
  }

  std::vector<ChartSeries> cost_series;
  std::vector<ChartSeries> revenue_series;
  for (auto kind : kinds)
  {
    ChartSeries before{std::string(to_string(kind)) + " uncut", {}};
    ChartSeries after{std::string(to_string(kind)) + " cut", {}};
    ChartSeries revenue{std::string(to_string(kind)), {}};
    for (auto const &s : result.scenarios)
    {
      if (s.valuation != kind)
      {
        continue;
      }
      double const x = s.cut * 100.0;
      before.points.emplace_back(x, summary_mean(result, s.name, "system_cost_before"));
      after.points.emplace_back(x, summary_mean(result, s.name, "system_cost_after"));
      revenue.points.emplace_back(x, 100.0 * summary_mean(result, s.name, "producer_revenue_gain"));
    }
    if (cost_series.empty())
    {
      cost_series.push_back(std::move(before));
    }
    cost_series.push_back(std::move(after));
    revenue_series.push_back(std::move(revenue));
  }
  write_line_chart(dir / "system_cost.svg",
                   {"System cost by cut percentage", "cut percentage (%)", "system cost"},
                   cost_series);
  write_line_chart(dir / "revenue.svg",
                   {"Producer revenue gain from the auction", "cut percentage (%)",
                    "extra revenue (%)"},
                   revenue_series);

  struct Panel
  {
    char const *file;
    char const *title;
    char const *y;
    char const *metric;
    double      scale;
  };
  for (auto kind : kinds)
  {
    for (Panel p : {Panel{"shift", "Shift percentage by valuation", "shift (%)", "shift_fraction", 100.0},
                    Panel{"cost", "Cost paid by valuation", "cost paid", "auction_cost", 1.0},
                    Panel{"saving", "Saving against today's bill by valuation", "saving (%)",
                          "saving_fraction", 100.0}})
    {
      std::vector<ChartSeries> series;
      for (auto const &s : result.scenarios)
      {
        if (s.valuation != kind)
        {
          continue;
        }
        ChartSeries line{"c = " + format_number(std::round(s.cut * 1e4) / 1e2) + "%", {}};
        for (auto const &[alpha, samples] : alpha_group_samples(s, &ConsumerReport::shift_fraction))
        {
          (void)samples;
          double const y =
              summary_mean(result, s.name, "alpha_" + alpha_label(alpha) + "." + p.metric);
          line.points.emplace_back(alpha, p.scale * y);
        }
        series.push_back(std::move(line));
      }
      write_line_chart(dir / (std::string(p.file) + "_" + std::string(to_string(kind)) + ".svg"),
                       {std::string(p.title) + " (" + std::string(to_string(kind)) + ")",
                        "valuation factor alpha", p.y},
                       series);
    }
  }
}

}  // namespace

void write_outputs(ExperimentResult const &result, std::filesystem::path const &dir)
{
  std::filesystem::create_directories(dir);
  open_and_write(dir / "consumer_report.csv",
                 [&](std::ostream &o) { write_consumer_report(o, result.scenarios); });
  open_and_write(dir / "system_report.csv",
                 [&](std::ostream &o) { write_system_report(o, result.scenarios); });
  open_and_write(dir / "summary.csv", [&](std::ostream &o) { write_summary(o, result.summary); });
  for (auto const &s : result.scenarios)
  {
    for (auto const &t : s.trials)
    {
      if (t.trace.empty())
      {
        continue;
      }
      open_and_write(dir / ("trace_" + s.name + "_trial" + std::to_string(t.trial) + ".csv"),
                     [&](std::ostream &o) { write_trace_csv(o, t.trace); });
    }
  }
  write_charts(result, dir);
}

}  // namespace gridauction
