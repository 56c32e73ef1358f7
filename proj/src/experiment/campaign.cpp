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

#include "canoma/experiment/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "canoma/closed_form.hpp"
#include "canoma/oversampled_matrix.hpp"
#include "canoma/power_optimizer.hpp"

namespace canoma::experiment {
namespace {

constexpr double kGainMin = 0.1;
constexpr double kGainMax = 10.0;
constexpr double kOracleStepFraction = 1e-3;

double rel_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

double reduction_error(double value, double reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

// Returns an empty string when the chain holds, else a description.
std::string check_chain(const BoundChain& c, double tau, const char* user) {
  const bool strict = tau >= kStrictChainMinTau;
  const double steps[] = {c.lower - c.baseline_noma, c.asymptotic - c.lower,
                          c.upper - c.asymptotic};
  for (double s : steps) {
    const bool ordered = strict ? s > 0.0 : s >= -kReductionTolerance;
    if (!ordered) {
      return std::string(user) + " chain not ordered (" + format_number(c.baseline_noma) + ", " +
             format_number(c.lower) + ", " + format_number(c.asymptotic) + ", " +
             format_number(c.upper) + ")";
    }
  }
  return {};
}

}  // namespace

double CampaignRng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

int CampaignRng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

CampaignResult random_campaign(const CampaignOptions& options) {
  if (options.draws < 1) throw std::invalid_argument("random_campaign: draws must be >= 1");
  CampaignRng rng(options.seed);
  CampaignResult out{ResultTable({"draw", "n", "tau", "h1_sq", "h2_sq", "h12_sq", "p1", "p2", "pr",
                                  "own_rel_err", "cross_rel_err", "weak_rel_err", "tau0_err",
                                  "chain_ok", "omega_s", "case", "optimizer_sum", "oracle_sum",
                                  "oracle_gap", "pass"}),
                     {}};
  CampaignSummary& sum = out.summary;
  sum.draws = options.draws;

  for (int d = 0; d < options.draws; ++d) {
    const int n = rng.integer(1, 64);
    const double drawn_tau = rng.uniform(0.01, 0.99);
    const double tau = options.force_tau_zero ? 0.0 : drawn_tau;
    const LinkChannels ch{rng.log_uniform(kGainMin, kGainMax), rng.log_uniform(kGainMin, kGainMax),
                          rng.log_uniform(kGainMin, kGainMax)};
    const PowerAllocation p{rng.log_uniform(kGainMin, kGainMax),
                            rng.log_uniform(kGainMin, kGainMax),
                            rng.log_uniform(kGainMin, kGainMax)};
    const double omega_s = rng.uniform01();

    const FrameConfig frame{n, tau};
    const StrongUserSnrs mu = strong_user_snrs(ch, p);
    const RateReport closed = anoma_rates(frame, ch, p);
    const RateReport noma = noma_rates(ch, p);
    std::vector<std::string> problems;

    // matrix
    double own_err = std::nan(""), cross_err = std::nan(""), weak_err = std::nan("");
    if (matrix_path_supports(frame)) {
      own_err = rel_error(rate_strong_own_matrix(frame, mu), closed.r_own_strong);
      cross_err = rel_error(rate_strong_cross_matrix(frame, mu), closed.r_cross_strong);
      weak_err = rel_error(rate_weak_matrix(frame, ch, p), closed.r_weak);
      const double worst = std::max({own_err, cross_err, weak_err});
      sum.max_matrix_rel_error = std::max(sum.max_matrix_rel_error, worst);
      ++sum.matrix_checked;
      if (!(worst <= kMatrixRelTolerance)) {
        problems.push_back("matrix vs closed form relative error " + format_number(worst));
      }
    }

    // tau0
    const RateReport sync = anoma_rates({n, 0.0}, ch, p);
    const double red_err = std::max({reduction_error(sync.r_own_strong, noma.r_own_strong),
                                     reduction_error(sync.r_cross_strong, noma.r_cross_strong),
                                     reduction_error(sync.r_weak, noma.r_weak)});
    sum.max_reduction_error = std::max(sum.max_reduction_error, red_err);
    if (!(red_err <= kReductionTolerance)) {
      problems.push_back("tau = 0 reduction error " + format_number(red_err));
    }

    // chain
    for (const std::string& msg : {check_chain(strong_cross_bounds(mu, tau), tau, "strong"),
                                   check_chain(weak_bounds(ch, p, tau), tau, "weak")}) {
      if (!msg.empty()) problems.push_back(msg);
    }
    const bool chain_ok = std::none_of(problems.begin(), problems.end(), [](const std::string& s) {
      return s.find("chain") != std::string::npos;
    });

    // oracle
    PowerScenario sc;
    sc.channels = ch;
    sc.r1_star = 0.5 * noma.r_own_strong;
    sc.r2_star = 0.5 * std::min(noma.r_cross_strong, noma.r_weak);
    sc.omega_s = omega_s;
    sc.omega_r = 1.0 - omega_s;
    sc.ps_max = 2.0 * (p.p1 + p.p2);
    sc.pr_max = 2.0 * p.pr;
    sc.tau = tau;
    sc.n_star = 100;
    const double step = kOracleStepFraction * sc.ps_max;
    const PowerSolution opt = minimize_power(sc);
    const PowerSolution grid = brute_force_power(sc, step);
    double gap = std::nan("");
    if (opt.feasible != grid.feasible) {
      problems.push_back("optimizer and oracle disagree on feasibility");
    } else if (opt.feasible) {
      gap = grid.weighted_sum - opt.weighted_sum;
      const double excess = std::abs(gap) - (omega_s * step + 1e-9);
      sum.max_oracle_excess = std::max(sum.max_oracle_excess, excess);
      if (excess > 0.0) problems.push_back("optimizer vs oracle gap " + format_number(gap));
    }

    const bool pass = problems.empty();
    out.table.add_row({static_cast<double>(d), static_cast<double>(n), tau, ch.h1_sq, ch.h2_sq,
                       ch.h12_sq, p.p1, p.p2, p.pr, own_err, cross_err, weak_err, red_err,
                       chain_ok ? 1.0 : 0.0, omega_s, std::string(to_string(opt.case_label)),
                       opt.weighted_sum, grid.weighted_sum, gap, pass ? 1.0 : 0.0});
    if (!pass) {
      ++sum.failed_draws;
      for (const auto& msg : problems) {
        sum.failures.push_back("draw " + std::to_string(d) + " (n=" + std::to_string(n) +
                               " tau=" + format_number(tau) + "): " + msg);
      }
    }
  }

  ResultTable& t = out.table;
  t.meta()["seed"] = std::to_string(options.seed);
  t.meta()["draws"] = std::to_string(options.draws);
  t.meta()["force_tau_zero"] = options.force_tau_zero ? "true" : "false";
  t.meta()["max_matrix_rel_error"] = format_number(sum.max_matrix_rel_error);
  t.meta()["max_tau0_error"] = format_number(sum.max_reduction_error);
  t.meta()["max_oracle_excess"] = format_number(sum.max_oracle_excess);
  t.meta()["failed_draws"] = std::to_string(sum.failed_draws);
  return out;
}

std::string describe(const CampaignSummary& s) {
  std::string out;
  out += "draws: " + std::to_string(s.draws) + "\n";
  out += "matrix checks: " + std::to_string(s.matrix_checked) +
         ", max relative error: " + format_number(s.max_matrix_rel_error) + "\n";
  out += "max tau=0 reduction error: " + format_number(s.max_reduction_error) + "\n";
  out += "max optimizer/oracle excess: " + format_number(s.max_oracle_excess) + "\n";
  out += "failed draws: " + std::to_string(s.failed_draws) + "\n";
  for (const auto& f : s.failures) out += "  " + f + "\n";
  return out;
}

}  // namespace canoma::experiment
