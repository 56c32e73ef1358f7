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

#include "canoma/experiment/presets.hpp"

#include <cmath>
#include <initializer_list>
#include <string>

#include "canoma/closed_form.hpp"
#include "canoma/oversampled_matrix.hpp"
#include "canoma/power_optimizer.hpp"

namespace canoma::experiment {
namespace {

using Row = std::vector<Cell>;

constexpr double kDefaultPowerTotal = 5.0;

std::string frame_text(const FrameConfig& frame) {
  return "n=" + std::to_string(frame.n) + " tau=" + format_number(frame.tau);
}

std::string matrix_note(bool included) {
  return included ? "included"
                  : "omitted: matrix path needs n <= " + std::to_string(kMaxMatrixFrame) +
                        " and tau in [" + format_number(kMinMatrixTau) + ", " +
                        format_number(1.0 - kMinMatrixTau) + "]";
}

// Fixed-total power splits, or the single allocation from the override.
std::vector<PowerAllocation> power_series(const std::optional<ScenarioBundle>& ov,
                                          std::initializer_list<double> p1_values, double pr) {
  if (ov) return {ov->powers};
  std::vector<PowerAllocation> out;
  for (double p1 : p1_values) out.push_back({p1, kDefaultPowerTotal - p1, pr});
  return out;
}

std::string gain_sweep_text(const char* name) {
  return std::string(name) + ": " + std::to_string(kGainSweepPoints) + " log-spaced points over [" +
         format_number(kGainSweepMin) + ", " + format_number(kGainSweepMax) + "]";
}

ResultTable fig4(const std::optional<ScenarioBundle>& ov) {
  const FrameConfig frame = ov ? ov->frame : FrameConfig{10, 0.5};
  const LinkChannels base = ov ? ov->scenario.channels : LinkChannels{1.0, 0.5, 2.0};
  const bool matrix = matrix_path_supports(frame);

  std::vector<std::string> cols = {"h1_sq", "p1", "p2", "mu1", "mu2", "own_closed"};
  if (matrix) cols.emplace_back("own_matrix");
  cols.emplace_back("cross_closed");
  if (matrix) cols.emplace_back("cross_matrix");
  cols.insert(cols.end(), {"own_noma", "cross_noma"});
  ResultTable t(std::move(cols));

  for (const PowerAllocation& p : power_series(ov, {0.5, 1.0, 1.5}, 0.0)) {
    for (double h1 : log_grid(kGainSweepMin, kGainSweepMax, kGainSweepPoints)) {
      LinkChannels ch = base;
      ch.h1_sq = h1;
      const StrongUserSnrs mu = strong_user_snrs(ch, p);
      const RateReport noma = noma_rates(ch, p);
      Row row{h1, p.p1, p.p2, mu.mu1, mu.mu2, rate_strong_own(frame, mu.mu1)};
      if (matrix) row.emplace_back(rate_strong_own_matrix(frame, mu));
      row.emplace_back(rate_strong_cross(frame, mu));
      if (matrix) row.emplace_back(rate_strong_cross_matrix(frame, mu));
      row.emplace_back(noma.r_own_strong);
      row.emplace_back(noma.r_cross_strong);
      t.add_row(std::move(row));
    }
  }
  t.meta()["frame"] = frame_text(frame);
  t.meta()["sweep"] = gain_sweep_text("h1_sq");
  t.meta()["matrix_columns"] = matrix_note(matrix);
  return t;
}

ResultTable fig5(const std::optional<ScenarioBundle>& ov) {
  const FrameConfig frame = ov ? ov->frame : FrameConfig{10, 0.5};
  const LinkChannels base = ov ? ov->scenario.channels : LinkChannels{1.0, 1.0, 1.0};
  const bool matrix = matrix_path_supports(frame);

  std::vector<std::string> cols = {"h12_sq", "p1", "p2", "pr", "weak_closed"};
  if (matrix) cols.emplace_back("weak_matrix");
  cols.emplace_back("weak_noma");
  ResultTable t(std::move(cols));

  for (const PowerAllocation& p : power_series(ov, {0.5, 1.0, 1.5}, 2.0)) {
    for (double h12 : log_grid(kGainSweepMin, kGainSweepMax, kGainSweepPoints)) {
      LinkChannels ch = base;
      ch.h12_sq = h12;
      Row row{h12, p.p1, p.p2, p.pr, rate_weak(frame, ch, p)};
      if (matrix) row.emplace_back(rate_weak_matrix(frame, ch, p));
      row.emplace_back(noma_rates(ch, p).r_weak);
      t.add_row(std::move(row));
    }
  }
  t.meta()["frame"] = frame_text(frame);
  t.meta()["sweep"] = gain_sweep_text("h12_sq");
  t.meta()["matrix_columns"] = matrix_note(matrix);
  return t;
}

ResultTable fig6(const std::optional<ScenarioBundle>& ov) {
  const double tau = ov ? ov->frame.tau : 0.5;
  const LinkChannels ch = ov ? ov->scenario.channels : LinkChannels{1.0, 0.8, 1.0};
  const PowerAllocation p = ov ? ov->powers : PowerAllocation{1.5, 3.5, 2.0};
  const bool matrix = matrix_path_supports({kPresetFrameLengths.back(), tau});

  const StrongUserSnrs mu = strong_user_snrs(ch, p);
  const BoundChain cross = strong_cross_bounds(mu, tau);
  const BoundChain weak = weak_bounds(ch, p, tau);
  const RateReport noma = noma_rates(ch, p);

  std::vector<std::string> cols = {"n", "cross_finite"};
  if (matrix) cols.emplace_back("cross_matrix");
  cols.insert(cols.end(), {"cross_asymptote", "cross_lower", "cross_upper", "cross_noma",
                           "weak_finite"});
  if (matrix) cols.emplace_back("weak_matrix");
  cols.insert(cols.end(), {"weak_asymptote", "weak_lower", "weak_upper", "weak_noma"});
  ResultTable t(std::move(cols));

  for (int n : kPresetFrameLengths) {
    const FrameConfig frame{n, tau};
    Row row{static_cast<double>(n), rate_strong_cross(frame, mu)};
    if (matrix) row.emplace_back(rate_strong_cross_matrix(frame, mu));
    row.insert(row.end(), {cross.asymptotic, cross.lower, cross.upper, noma.r_cross_strong,
                           rate_weak(frame, ch, p)});
    if (matrix) row.emplace_back(rate_weak_matrix(frame, ch, p));
    row.insert(row.end(), {weak.asymptotic, weak.lower, weak.upper, noma.r_weak});
    t.add_row(std::move(row));
  }
  t.meta()["tau"] = format_number(tau);
  t.meta()["matrix_columns"] = matrix_note(matrix);
  return t;
}

ResultTable fig7(const std::optional<ScenarioBundle>& ov) {
  const LinkChannels ch = ov ? ov->scenario.channels : LinkChannels{1.0, 0.5, 2.0};
  ResultTable t({"n", "p1", "p2", "tau_star_cross", "tau_star_weak", "cross_at_tau_star",
                 "weak_at_tau_star"});
  for (const PowerAllocation& p : power_series(ov, {0.5, 1.0, 1.5, 2.0, 2.5}, 2.0)) {
    const StrongUserSnrs mu = strong_user_snrs(ch, p);
    for (int n : kPresetFrameLengths) {
      const double tc = optimal_tau(n, TauObjective::kStrongCross, ch, p);
      const double tw = optimal_tau(n, TauObjective::kWeak, ch, p);
      t.add_row({static_cast<double>(n), p.p1, p.p2, tc, tw, rate_strong_cross({n, tc}, mu),
                 rate_weak({n, tw}, ch, p)});
    }
  }
  t.meta()["grid_step"] = format_number(kDefaultTauGridStep);
  return t;
}

void append_solution(Row& row, const PowerSolution& s) {
  row.insert(row.end(), {s.feasible ? 1.0 : 0.0, s.allocation.p1, s.allocation.p2,
                         s.allocation.pr, s.weighted_sum});
  row.emplace_back(std::string(to_string(s.case_label)));
}

std::vector<std::string> solution_columns(const std::string& prefix) {
  return {prefix + "_feasible", prefix + "_p1", prefix + "_p2", prefix + "_pr", prefix + "_sum",
          prefix + "_case"};
}

std::string gamma_grid_text() {
  return std::to_string(kGammaGridPoints) + "x" + std::to_string(kGammaGridPoints) +
         " linear grid over [" + format_number(kGammaGridMin) + ", " +
         format_number(kGammaGridMax) + "]";
}

void power_meta(ResultTable& t, const PowerScenario& sc) {
  t.meta()["tau"] = format_number(sc.tau);
  t.meta()["n_star"] = std::to_string(sc.n_star);
  t.meta()["channels"] = format_number(sc.channels.h1_sq) + "," + format_number(sc.channels.h2_sq) +
                         "," + format_number(sc.channels.h12_sq);
  t.meta()["limits"] = format_number(sc.ps_max) + "," + format_number(sc.pr_max);
  t.meta()["infeasible_rows"] = "powers and sum reported as 0";
}

// fig8 keeps the full solutions; fig9 keeps the comparison only.
ResultTable gamma_grid(const std::optional<ScenarioBundle>& ov, bool full) {
  const PowerScenario base = (ov ? *ov : power_preset_base()).scenario;
  std::vector<std::string> cols = {"gamma1", "gamma2"};
  if (full) {
    for (const auto& c : solution_columns("anoma")) cols.push_back(c);
    for (const auto& c : solution_columns("noma")) cols.push_back(c);
  } else {
    cols.insert(cols.end(), {"anoma_sum", "noma_sum"});
  }
  cols.insert(cols.end(), {"delta", "region"});
  ResultTable t(std::move(cols));

  const auto grid = linear_grid(kGammaGridMin, kGammaGridMax, kGammaGridPoints);
  for (double g1 : grid) {
    for (double g2 : grid) {
      PowerScenario sc = base;
      sc.r1_star = rate_from_sinr(g1);
      sc.r2_star = rate_from_sinr(g2);
      const PowerComparison cmp = compare_weighted_power(sc);
      Row row{g1, g2};
      if (full) {
        append_solution(row, cmp.anoma);
        append_solution(row, cmp.noma);
      } else {
        row.insert(row.end(), {cmp.anoma.weighted_sum, cmp.noma.weighted_sum});
      }
      row.emplace_back(cmp.delta.value_or(std::nan("")));
      row.emplace_back(std::string(to_string(cmp.region)));
      t.add_row(std::move(row));
    }
  }
  power_meta(t, base);
  t.meta()["weights"] = format_number(base.omega_s) + "," + format_number(base.omega_r);
  t.meta()["sweep"] = gamma_grid_text();
  return t;
}

ResultTable fig10(const std::optional<ScenarioBundle>& ov) {
  PowerScenario base = power_preset_base().scenario;
  base.r1_star = rate_from_sinr(1.0);
  base.r2_star = rate_from_sinr(2.0);
  if (ov) base = ov->scenario;

  std::vector<std::string> cols = {"omega_s", "omega_r"};
  for (const char* prefix : {"anoma", "noma"}) {
    for (const auto& c : solution_columns(prefix)) cols.push_back(c);
    cols.push_back(std::string(prefix) + "_bs_term");
    cols.push_back(std::string(prefix) + "_relay_term");
  }
  ResultTable t(std::move(cols));

  const int steps = static_cast<int>(std::lround(1.0 / kWeightSweepStep));
  for (int i = 0; i <= steps; ++i) {
    PowerScenario sc = base;
    sc.omega_s = static_cast<double>(i) / steps;
    sc.omega_r = 1.0 - sc.omega_s;
    const PowerComparison cmp = compare_weighted_power(sc);
    Row row{sc.omega_s, sc.omega_r};
    for (const PowerSolution* s : {&cmp.anoma, &cmp.noma}) {
      append_solution(row, *s);
      row.emplace_back(sc.omega_s * (s->allocation.p1 + s->allocation.p2));
      row.emplace_back(sc.omega_r * s->allocation.pr);
    }
    t.add_row(std::move(row));
  }
  power_meta(t, base);
  t.meta()["gamma"] = format_number(sinr_from_rate(base.r1_star)) + "," +
                      format_number(sinr_from_rate(base.r2_star));
  t.meta()["sweep"] = "omega_s over [0, 1] step " + format_number(kWeightSweepStep);
  return t;
}

}  // namespace

PresetId parse_preset_id(std::string_view name) {
  for (PresetId id : {PresetId::kFig4, PresetId::kFig5, PresetId::kFig6, PresetId::kFig7,
                      PresetId::kFig8, PresetId::kFig9, PresetId::kFig10}) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown figure id '" + std::string(name) + "'");
}

std::string_view to_string(PresetId id) {
  switch (id) {
    case PresetId::kFig4: return "fig4";
    case PresetId::kFig5: return "fig5";
    case PresetId::kFig6: return "fig6";
    case PresetId::kFig7: return "fig7";
    case PresetId::kFig8: return "fig8";
    case PresetId::kFig9: return "fig9";
    case PresetId::kFig10: return "fig10";
  }
  return "unknown";
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (points < 1 || !(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("log_grid: bad range");
  std::vector<double> out(static_cast<std::size_t>(points));
  const double span = std::log(hi / lo);
  for (int i = 0; i < points; ++i) {
    out[i] = points == 1 ? lo : lo * std::exp(span * i / (points - 1));
  }
  out.back() = points == 1 ? lo : hi;
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1 || !(hi >= lo)) throw std::invalid_argument("linear_grid: bad range");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    out[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  }
  out.back() = points == 1 ? lo : hi;
  return out;
}

ScenarioBundle power_preset_base() {
  ScenarioBundle b;
  b.scenario.channels = {1.0, 0.5, 2.0};
  b.scenario.r1_star = rate_from_sinr(1.0);
  b.scenario.r2_star = rate_from_sinr(1.0);
  b.scenario.omega_s = 0.2;
  b.scenario.omega_r = 0.8;
  b.scenario.ps_max = 20.0;
  b.scenario.pr_max = 5.0;
  b.scenario.tau = 0.5;
  b.scenario.n_star = 100;
  b.frame = {100, 0.5};
  return b;
}

ResultTable run_preset(PresetId id, const std::optional<ScenarioBundle>& overrides) {
  ResultTable t;
  switch (id) {
    case PresetId::kFig4: t = fig4(overrides); break;
    case PresetId::kFig5: t = fig5(overrides); break;
    case PresetId::kFig6: t = fig6(overrides); break;
    case PresetId::kFig7: t = fig7(overrides); break;
    case PresetId::kFig8: t = gamma_grid(overrides, true); break;
    case PresetId::kFig9: t = gamma_grid(overrides, false); break;
    case PresetId::kFig10: t = fig10(overrides); break;
  }
  t.meta()["preset"] = std::string(to_string(id));
  t.meta()["overrides"] = overrides ? "scenario file" : "none";
  return t;
}

}  // namespace canoma::experiment
