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

#include "gridauction/config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace gridauction {

using nlohmann::json;

void ScenarioConfig::validate() const
{
  if (population < 1)
  {
    throw ConfigError("population must be at least 1");
  }
  if (slot_count < 2)
  {
    throw ConfigError("slot_count must be at least 2");
  }
  if (trials < 1)
  {
    throw ConfigError("trials must be at least 1");
  }
  if (cut_percentages.empty())
  {
    throw ConfigError("cut_percentages must list at least one value");
  }
  for (double c : cut_percentages)
  {
    if (!(c > 0.0 && c <= 1.0))
    {
      throw ConfigError("every cut percentage must lie in (0, 1], got " + format_number(c));
    }
  }
  if (valuations.empty())
  {
    throw ConfigError("valuation must name at least one distribution");
  }
  if (guarantee < 0.0)
  {
    throw ConfigError("guarantee must be non-negative");
  }
  if (round_cap < 1)
  {
    throw ConfigError("round_cap must be at least 1");
  }
  auto const &g = generator;
  if (!(g.base_min > 0.0) || g.base_max < g.base_min)
  {
    throw ConfigError("generator base load needs 0 < base_min <= base_max");
  }
  if (g.morning_min < 0.0 || g.morning_max < g.morning_min || g.evening_min < 0.0 ||
      g.evening_max < g.evening_min)
  {
    throw ConfigError("generator bump magnitudes need 0 <= min <= max");
  }
  auto const window_ok = [&](std::size_t first, std::size_t last) {
    return first >= 1 && first <= last && last <= slot_count;
  };
  if (!demands_csv && (!window_ok(g.morning_first, g.morning_last) ||
                       !window_ok(g.evening_first, g.evening_last)))
  {
    throw ConfigError("generator windows must lie within slots 1.." + std::to_string(slot_count));
  }
  if (g.shoulder < 0.0 || g.shoulder > 1.0)
  {
    throw ConfigError("generator shoulder must lie in [0, 1]");
  }
  // building the model runs its own parameter checks
  try
  {
    (void)make_cost_model(cost, population);
  }
  catch (std::invalid_argument const &e)
  {
    throw ConfigError(e.what());
  }
}

CostModel make_cost_model(CostParams const &params, std::size_t population)
{
  if (params.form == CostForm::Experiment)
  {
    return CostModel(ExperimentCost{params.q1, params.q2, population});
  }
  return CostModel(QuadraticCost{params.c1, params.c2, params.c3});
}

namespace {

void reject_unknown(json const &obj, std::set<std::string> const &allowed, std::string const &where)
{
  if (!obj.is_object())
  {
    throw ConfigError(where + " must be an object");
  }
  for (auto const &[key, value] : obj.items())
  {
    if (!allowed.count(key))
    {
      throw ConfigError("unknown key '" + where + key + "'");
    }
  }
}

template <typename T>
void read(json const &obj, char const *key, T &into, std::string const &where)
{
  if (!obj.contains(key))
  {
    return;
  }
  if constexpr (std::is_unsigned_v<T>)
  {
    if (!obj.at(key).is_number_unsigned())
    {
      throw ConfigError("key '" + where + key + "' must be a non-negative integer");
    }
  }
  try
  {
    into = obj.at(key).get<T>();
  }
  catch (json::exception const &)
  {
    throw ConfigError("key '" + where + key + "' has the wrong type");
  }
}

CostParams read_cost(json const &obj)
{
  reject_unknown(obj, {"form", "q1", "q2", "c1", "c2", "c3"}, "cost.");
  CostParams  p;
  std::string form = "experiment";
  read(obj, "form", form, "cost.");
  if (form == "experiment")
  {
    p.form = CostForm::Experiment;
    if (obj.contains("c1") || obj.contains("c2") || obj.contains("c3"))
    {
      throw ConfigError("cost.c1..c3 only apply to cost.form = quadratic");
    }
  }
  else if (form == "quadratic" || form == "general")
  {
    p.form = CostForm::Quadratic;
    if (!obj.contains("c1"))
    {
      throw ConfigError("cost.form = quadratic requires cost.c1");
    }
    if (obj.contains("q1") || obj.contains("q2"))
    {
      throw ConfigError("cost.q1 and cost.q2 only apply to cost.form = experiment");
    }
  }
  else
  {
    throw ConfigError("cost.form must be experiment or quadratic, got '" + form + "'");
  }
  read(obj, "q1", p.q1, "cost.");
  read(obj, "q2", p.q2, "cost.");
  read(obj, "c1", p.c1, "cost.");
  read(obj, "c2", p.c2, "cost.");
  read(obj, "c3", p.c3, "cost.");
  return p;
}

GeneratorParams read_generator(json const &obj)
{
  reject_unknown(obj,
                 {"base_min", "base_max", "morning_first", "morning_last", "morning_min",
                  "morning_max", "evening_first", "evening_last", "evening_min", "evening_max",
                  "shoulder"},
                 "generator.");
  GeneratorParams g;
  read(obj, "base_min", g.base_min, "generator.");
  read(obj, "base_max", g.base_max, "generator.");
  read(obj, "morning_first", g.morning_first, "generator.");
  read(obj, "morning_last", g.morning_last, "generator.");
  read(obj, "morning_min", g.morning_min, "generator.");
  read(obj, "morning_max", g.morning_max, "generator.");
  read(obj, "evening_first", g.evening_first, "generator.");
  read(obj, "evening_last", g.evening_last, "generator.");
  read(obj, "evening_min", g.evening_min, "generator.");
  read(obj, "evening_max", g.evening_max, "generator.");
  read(obj, "shoulder", g.shoulder, "generator.");
  return g;
}

}  // namespace

ScenarioConfig parse_config(std::string const &text, std::filesystem::path const &base_dir)
{
  json root;
  try
  {
    root = json::parse(text);
  }
  catch (json::parse_error const &e)
  {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(root,
                 {"population", "slot_count", "cut_percentages", "cost", "valuation", "guarantee",
                  "trials", "seed", "round_cap", "threads", "output_dir", "demands_csv",
                  "generator"},
                 "");

  ScenarioConfig cfg;
  read(root, "population", cfg.population, "");
  read(root, "slot_count", cfg.slot_count, "");
  read(root, "cut_percentages", cfg.cut_percentages, "");
  read(root, "guarantee", cfg.guarantee, "");
  read(root, "trials", cfg.trials, "");
  read(root, "seed", cfg.seed, "");
  read(root, "round_cap", cfg.round_cap, "");
  read(root, "threads", cfg.threads, "");
  if (root.contains("cost"))
  {
    cfg.cost = read_cost(root.at("cost"));
  }
  if (root.contains("generator"))
  {
    cfg.generator = read_generator(root.at("generator"));
  }
  if (root.contains("valuation"))
  {
    auto const &v = root.at("valuation");
    std::vector<std::string> names;
    if (v.is_string())
    {
      names.push_back(v.get<std::string>());
    }
    else
    {
      read(root, "valuation", names, "");
    }
    cfg.valuations.clear();
    for (auto const &n : names)
    {
      cfg.valuations.push_back(parse_valuation_kind(n));
    }
  }
  std::string out;
  read(root, "output_dir", out, "");
  if (!out.empty())
  {
    cfg.output_dir = out;
  }
  if (root.contains("demands_csv"))
  {
    std::string path;
    read(root, "demands_csv", path, "");
    std::filesystem::path p(path);
    cfg.demands_csv = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ConfigError("cannot open config file " + path.string());
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

}  // namespace gridauction
