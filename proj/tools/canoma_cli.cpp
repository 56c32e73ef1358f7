// Copyright 2026 The canoma Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// canoma: command-line front end.
//
// Exit status: 0 success, 1 usage or input error, 2 infeasible scenario
// (minimize-power), 3 campaign check failure.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "canoma/closed_form.hpp"
#include "canoma/experiment/campaign.hpp"
#include "canoma/experiment/presets.hpp"
#include "canoma/experiment/result_table.hpp"
#include "canoma/experiment/scenario_file.hpp"
#include "canoma/oversampled_matrix.hpp"
#include "canoma/power_optimizer.hpp"

namespace {

using canoma::experiment::Cell;
using canoma::experiment::ResultTable;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitCampaignFailure = 3;

struct GlobalOptions {
  std::string scenario_path;
  std::string out_path;
  std::string format = "csv";
  std::uint64_t seed = 1;
};

canoma::experiment::ScenarioBundle require_scenario(const GlobalOptions& g) {
  if (g.scenario_path.empty()) throw std::invalid_argument("--scenario is required for this command");
  return canoma::experiment::load_scenario(g.scenario_path);
}

void write(ResultTable& table, const GlobalOptions& g, const std::string& command_line) {
  table.meta()["command"] = command_line;
  table.meta()["seed"] = std::to_string(g.seed);
  table.meta()["version"] = std::string(canoma::experiment::kArtifactVersion);
  const auto format = canoma::experiment::parse_table_format(g.format);
  if (g.out_path.empty() || g.out_path == "-") {
    std::cout << canoma::experiment::render(table, format);
  } else {
    canoma::experiment::emit(table, format, g.out_path);
  }
}

ResultTable rates_table(const canoma::experiment::ScenarioBundle& b) {
  const auto& ch = b.scenario.channels;
  const bool matrix = canoma::matrix_path_supports(b.frame);
  std::vector<std::string> cols = {"n", "tau", "own", "cross", "weak", "own_noma", "cross_noma",
                                   "weak_noma"};
  if (matrix) cols.insert(cols.end(), {"own_matrix", "cross_matrix", "weak_matrix"});
  ResultTable t(std::move(cols));

  const auto anoma = canoma::anoma_rates(b.frame, ch, b.powers);
  const auto noma = canoma::noma_rates(ch, b.powers);
  std::vector<Cell> row{static_cast<double>(b.frame.n), b.frame.tau, anoma.r_own_strong,
                        anoma.r_cross_strong, anoma.r_weak, noma.r_own_strong,
                        noma.r_cross_strong, noma.r_weak};
  if (matrix) {
    const auto mu = canoma::strong_user_snrs(ch, b.powers);
    row.insert(row.end(), {canoma::rate_strong_own_matrix(b.frame, mu),
                           canoma::rate_strong_cross_matrix(b.frame, mu),
                           canoma::rate_weak_matrix(b.frame, ch, b.powers)});
  }
  t.add_row(std::move(row));
  t.meta()["matrix_columns"] = matrix ? "included" : "omitted: frame outside matrix path";
  return t;
}

ResultTable bounds_table(const canoma::experiment::ScenarioBundle& b) {
  const auto& ch = b.scenario.channels;
  const double tau = b.frame.tau;
  ResultTable t({"user", "q", "baseline_noma", "lower", "asymptotic", "upper", "finite"});
  const auto mu = canoma::strong_user_snrs(ch, b.powers);
  const auto rates = canoma::anoma_rates(b.frame, ch, b.powers);
  const auto add = [&](const char* user, const canoma::BoundChain& c, double finite) {
    t.add_row({std::string(user), canoma::q_of_tau(tau), c.baseline_noma, c.lower, c.asymptotic,
               c.upper, finite});
  };
  add("strong_cross", canoma::strong_cross_bounds(mu, tau), rates.r_cross_strong);
  add("weak", canoma::weak_bounds(ch, b.powers, tau), rates.r_weak);
  t.meta()["n"] = std::to_string(b.frame.n);
  return t;
}

ResultTable optimal_tau_table(const canoma::experiment::ScenarioBundle& b,
                              const std::string& objective, double grid_step) {
  const auto& ch = b.scenario.channels;
  ResultTable t({"n", "objective", "tau_star", "rate_at_tau_star"});
  const auto mu = canoma::strong_user_snrs(ch, b.powers);
  if (objective == "cross" || objective == "both") {
    const double ts =
        canoma::optimal_tau(b.frame.n, canoma::TauObjective::kStrongCross, ch, b.powers, grid_step);
    t.add_row({static_cast<double>(b.frame.n), std::string("cross"), ts,
               canoma::rate_strong_cross({b.frame.n, ts}, mu)});
  }
  if (objective == "weak" || objective == "both") {
    const double ts =
        canoma::optimal_tau(b.frame.n, canoma::TauObjective::kWeak, ch, b.powers, grid_step);
    t.add_row({static_cast<double>(b.frame.n), std::string("weak"), ts,
               canoma::rate_weak({b.frame.n, ts}, ch, b.powers)});
  }
  t.meta()["grid_step"] = canoma::experiment::format_number(grid_step);
  return t;
}

ResultTable solution_table(const canoma::PowerSolution& s, const canoma::PowerScenario& sc,
                           int n) {
  ResultTable t({"feasible", "case", "reason", "p1", "p2", "pr", "weighted_sum", "weight_tie",
                 "slack_own", "slack_cross", "slack_weak"});
  const double nan = std::nan("");
  canoma::QosSlacks slack{nan, nan, nan};
  if (s.feasible) slack = canoma::verify_qos(s, sc, n);
  t.add_row({s.feasible ? 1.0 : 0.0, std::string(canoma::to_string(s.case_label)),
             s.infeasible_reason ? std::string(canoma::to_string(*s.infeasible_reason))
                                 : std::string(),
             s.allocation.p1, s.allocation.p2, s.allocation.pr, s.weighted_sum,
             s.weight_tie ? 1.0 : 0.0, slack.own_strong, slack.cross_strong, slack.weak});
  t.meta()["slack_frame_n"] = std::to_string(n);
  return t;
}

ResultTable compare_table(const canoma::PowerComparison& c) {
  ResultTable t({"anoma_feasible", "anoma_sum", "noma_feasible", "noma_sum", "delta", "region"});
  t.add_row({c.anoma.feasible ? 1.0 : 0.0, c.anoma.weighted_sum, c.noma.feasible ? 1.0 : 0.0,
             c.noma.weighted_sum, c.delta.value_or(std::nan("")),
             std::string(canoma::to_string(c.region))});
  return t;
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) out += ' ';
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asynchronous cooperative NOMA rate analysis and power allocation"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(canoma::experiment::kArtifactVersion));

  GlobalOptions g;
  app.add_option("--scenario", g.scenario_path, "Scenario JSON file");
  app.add_option("--out", g.out_path, "Output file (default: stdout)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", g.seed, "Seed for all randomness");

  auto* rates = app.add_subcommand("rates", "Finite-frame and synchronous rates");
  auto* bounds = app.add_subcommand("bounds", "Asymptotic rate and its bounds");

  auto* opt_tau = app.add_subcommand("optimal-tau", "Grid search of the timing mismatch");
  std::string objective = "both";
  double grid_step = canoma::kDefaultTauGridStep;
  opt_tau->add_option("--objective", objective)->check(CLI::IsMember({"cross", "weak", "both"}));
  opt_tau->add_option("--grid-step", grid_step, "Grid spacing in (0, 0.1]");

  auto* minimize = app.add_subcommand("minimize-power", "Weighted-sum power minimization");
  auto* compare = app.add_subcommand("compare", "ANOMA against NOMA minimized power");

  auto* figure = app.add_subcommand("figure", "Run a figure preset");
  std::string figure_id;
  figure->add_option("id", figure_id, "fig4 ... fig10")->required();

  auto* campaign = app.add_subcommand("campaign", "Seeded randomized cross-checks");
  int draws = 200;
  bool tau_zero = false;
  campaign->add_option("--draws", draws, "Number of draws")->check(CLI::PositiveNumber);
  campaign->add_flag("--tau-zero", tau_zero, "Force tau = 0 in every draw");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command_line = join_args(argc, argv);
  try {
    if (rates->parsed()) {
      auto t = rates_table(require_scenario(g));
      write(t, g, command_line);
    } else if (bounds->parsed()) {
      auto t = bounds_table(require_scenario(g));
      write(t, g, command_line);
    } else if (opt_tau->parsed()) {
      auto t = optimal_tau_table(require_scenario(g), objective, grid_step);
      write(t, g, command_line);
    } else if (minimize->parsed()) {
      const auto b = require_scenario(g);
      const auto s = canoma::minimize_power(b.scenario);
      auto t = solution_table(s, b.scenario, b.frame.n);
      write(t, g, command_line);
      if (!s.feasible) return kExitInfeasible;
    } else if (compare->parsed()) {
      auto t = compare_table(canoma::compare_weighted_power(require_scenario(g).scenario));
      write(t, g, command_line);
    } else if (figure->parsed()) {
      const auto id = canoma::experiment::parse_preset_id(figure_id);
      std::optional<canoma::experiment::ScenarioBundle> overrides;
      if (!g.scenario_path.empty()) overrides = canoma::experiment::load_scenario(g.scenario_path);
      auto t = canoma::experiment::run_preset(id, overrides);
      write(t, g, command_line);
    } else if (campaign->parsed()) {
      auto result = canoma::experiment::random_campaign({g.seed, draws, tau_zero});
      write(result.table, g, command_line);
      std::cerr << canoma::experiment::describe(result.summary);
      if (!result.summary.passed()) return kExitCampaignFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
