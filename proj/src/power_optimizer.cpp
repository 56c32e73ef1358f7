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

#include "canoma/power_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "canoma/closed_form.hpp"

namespace canoma {
namespace {

// Relative tolerance for the Case-2 weight comparison and the Pr <= pr_max
// post-check.
constexpr double kTieTolerance = 1e-12;
constexpr double kPrLimitTolerance = 1e-9;

void require_channels(const LinkChannels& ch) {
  if (!(ch.h1_sq > 0.0)) throw DegenerateChannelError("channels.h1_sq must be > 0");
  if (!(ch.h2_sq > 0.0)) throw DegenerateChannelError("channels.h2_sq must be > 0");
  if (!(ch.h12_sq > 0.0)) throw DegenerateChannelError("channels.h12_sq must be > 0");
}

PowerSolution infeasible(InfeasibleReason reason) {
  PowerSolution s;
  s.case_label = CaseLabel::kInfeasible;
  s.feasible = false;
  s.infeasible_reason = reason;
  return s;
}

std::optional<InfeasibleReason> check_budget(const Thresholds& th, double ps_max) {
  if (th.p1_floor > ps_max) return InfeasibleReason::kP1FloorExceedsPsMax;
  if (th.zeta2 > th.p2_ceiling) return InfeasibleReason::kZeta2ExceedsBudget;
  return std::nullopt;
}

struct Candidate {
  double p2 = 0.0;
  double pr = 0.0;
  CaseLabel label = CaseLabel::kCase1;
  bool tie = false;
};

class Solver {
 public:
  Solver(const PowerScenario& scenario, const QosDerived& qos, const Thresholds& th)
      : sc_(scenario), qos_(qos), th_(th) {}

  // Minimize omega_s P2 (Pr = 0) over [lo, hi].
  Candidate solve_case_1(double lo, CaseLabel label) const { return {lo, 0.0, label, false}; }

  // Minimize omega_s P2 + omega_r (gamma2/|h12|^2 - slope P2) over [lo, hi].
  Candidate solve_case_2(double lo, double hi, CaseLabel label) const {
    const double critical = sc_.omega_r * th_.relay_slope;
    const double scale = std::max({sc_.omega_s, critical, std::numeric_limits<double>::min()});
    Candidate c{lo, 0.0, label, false};
    if (std::abs(sc_.omega_s - critical) <= kTieTolerance * scale) {
      c.tie = true;
    } else if (sc_.omega_s < critical) {
      c.p2 = hi;
    }
    c.pr = relay_line(c.p2);
    return c;
  }

  double relay_line(double p2) const {
    return std::max(0.0, qos_.gamma2 / sc_.channels.h12_sq - th_.relay_slope * p2);
  }

  double objective(const Candidate& c) const {
    return sc_.omega_s * (th_.p1_floor + c.p2) + sc_.omega_r * c.pr;
  }

 private:
  const PowerScenario& sc_;
  const QosDerived& qos_;
  const Thresholds& th_;
};

}  // namespace

double epsilon_star(double r1_star, double tau, int n_star) {
  if (!std::isfinite(r1_star) || r1_star < 0.0) throw ValidationError("qos.r1_star", "must be >= 0");
  if (!std::isfinite(tau) || tau < 0.0 || tau >= 1.0) {
    throw ValidationError("frame.tau", "must lie in [0, 1)");
  }
  if (n_star < 1) throw ValidationError("n_star", "must be >= 1");
  return std::exp2(2.0 * r1_star) * std::expm1(tau / n_star * r1_star * std::numbers::ln2);
}

QosDerived derive_qos(const PowerScenario& scenario) {
  scenario.validate();
  QosDerived qos;
  qos.gamma1 = sinr_from_rate(scenario.r1_star);
  qos.gamma2 = sinr_from_rate(scenario.r2_star);
  qos.epsilon_star = epsilon_star(scenario.r1_star, scenario.tau, scenario.n_star);
  qos.gamma1_eff = qos.gamma1 + qos.epsilon_star;
  qos.q = q_of_tau(scenario.tau);
  return qos;
}

Thresholds compute_thresholds(const PowerScenario& scenario) {
  return compute_thresholds(scenario, derive_qos(scenario));
}

Thresholds compute_thresholds(const PowerScenario& scenario, const QosDerived& qos) {
  require_channels(scenario.channels);
  const double h1 = scenario.channels.h1_sq;
  const double h2 = scenario.channels.h2_sq;
  const double h12 = scenario.channels.h12_sq;
  const double g = qos.gamma1_eff;
  const double half_q = 0.5 * qos.q;

  // Weak-user signal gain per unit P2 at User 1 and at User 2, P1 at its floor.
  const double ratio_at_u1 = (1.0 + g) / (1.0 + half_q * g);
  const double ratio_at_u2 = (h1 + g * h2) / (h1 + half_q * g * h2);

  Thresholds th;
  const double from_strong = qos.gamma2 / h1 * ratio_at_u1;
  const double from_relay_limit = (qos.gamma2 / h12 - scenario.pr_max) * (h12 / h2) * ratio_at_u2;
  th.zeta2 = std::max(from_strong, from_relay_limit);
  th.zeta2_star = qos.gamma2 / h2 * ratio_at_u2;
  th.p1_floor = g / h1;
  th.p2_ceiling = scenario.ps_max - th.p1_floor;
  th.relay_slope = (h2 / h12) / ratio_at_u2;
  return th;
}

double zeta_r(const PowerScenario& scenario, double p1, double p2) {
  require_channels(scenario.channels);
  if (!(p1 >= 0.0) || !(p2 >= 0.0)) throw ValidationError("powers", "p1, p2 must be >= 0");
  const double h2 = scenario.channels.h2_sq;
  const double h12 = scenario.channels.h12_sq;
  const double gamma2 = sinr_from_rate(scenario.r2_star);
  const double q = q_of_tau(scenario.tau);
  const double gain = (1.0 + 0.5 * q * p1 * h2) / (1.0 + p1 * h2);
  return std::max(0.0, gamma2 / h12 - p2 * h2 / h12 * gain);
}

PowerSolution minimize_power(const PowerScenario& scenario) {
  return minimize_power(scenario, derive_qos(scenario));
}

PowerSolution minimize_power(const PowerScenario& scenario, const QosDerived& qos) {
  scenario.validate();
  const Thresholds th = compute_thresholds(scenario, qos);
  if (auto reason = check_budget(th, scenario.ps_max)) return infeasible(*reason);

  const Solver solver(scenario, qos, th);
  Candidate best;
  if (th.zeta2_star < th.zeta2) {
    best = solver.solve_case_1(th.zeta2, CaseLabel::kCase1);
  } else if (th.zeta2_star > th.p2_ceiling) {
    best = solver.solve_case_2(th.zeta2, th.p2_ceiling, CaseLabel::kCase2);
  } else {
    const Candidate relay_off = solver.solve_case_1(th.zeta2_star, CaseLabel::kCase3a);
    const Candidate relay_on = solver.solve_case_2(th.zeta2, th.zeta2_star, CaseLabel::kCase3b);
    best = solver.objective(relay_on) < solver.objective(relay_off) ? relay_on : relay_off;
  }

  if (best.pr > scenario.pr_max * (1.0 + kPrLimitTolerance)) {
    throw std::logic_error("minimize_power: relay power " + std::to_string(best.pr) +
                           " exceeds pr_max " + std::to_string(scenario.pr_max));
  }

  PowerSolution s;
  s.allocation = {th.p1_floor, best.p2, std::min(best.pr, scenario.pr_max)};
  s.weighted_sum = weighted_sum_power(s.allocation, scenario.omega_s, scenario.omega_r);
  s.case_label = best.label;
  s.feasible = true;
  s.weight_tie = best.tie;
  return s;
}

PowerSolution brute_force_power(const PowerScenario& scenario, double p2_step) {
  scenario.validate();
  if (!(p2_step > 0.0 && p2_step <= 1e-3 * scenario.ps_max)) {
    throw ValidationError("p2_step", "must lie in (0, 1e-3 * ps_max]");
  }
  const Thresholds th = compute_thresholds(scenario);
  if (auto reason = check_budget(th, scenario.ps_max)) return infeasible(*reason);

  PowerSolution best = infeasible(InfeasibleReason::kZeta2ExceedsBudget);
  const auto consider = [&](double p2) {
    const double pr = zeta_r(scenario, th.p1_floor, p2);
    if (pr > scenario.pr_max * (1.0 + kPrLimitTolerance)) return;
    const PowerAllocation a{th.p1_floor, p2, std::min(pr, scenario.pr_max)};
    const double sum = weighted_sum_power(a, scenario.omega_s, scenario.omega_r);
    if (!best.feasible || sum < best.weighted_sum) {
      best.allocation = a;
      best.weighted_sum = sum;
      best.feasible = true;
      best.case_label = CaseLabel::kGridSearch;
      best.infeasible_reason.reset();
    }
  };
  for (long i = 0;; ++i) {
    const double p2 = th.zeta2 + static_cast<double>(i) * p2_step;
    if (p2 >= th.p2_ceiling) break;
    consider(std::max(0.0, p2));
  }
  consider(std::max(0.0, th.p2_ceiling));
  return best;
}

double QosSlacks::min() const { return std::min({own_strong, cross_strong, weak}); }

QosSlacks verify_qos(const PowerSolution& solution, const PowerScenario& scenario, int n) {
  if (!solution.feasible) throw std::invalid_argument("verify_qos: solution is infeasible");
  scenario.validate();
  const FrameConfig frame{n, scenario.tau};
  const RateReport rates = anoma_rates(frame, scenario.channels, solution.allocation);
  return {rates.r_own_strong - scenario.r1_star, rates.r_cross_strong - scenario.r2_star,
          rates.r_weak - scenario.r2_star};
}

std::string_view to_string(FeasibilityRegion region) {
  switch (region) {
    case FeasibilityRegion::kA: return "A";
    case FeasibilityRegion::kB: return "B";
    case FeasibilityRegion::kC: return "C";
    case FeasibilityRegion::kD: return "D";
  }
  return "?";
}

PowerComparison compare_weighted_power(const PowerScenario& scenario) {
  PowerScenario synchronous = scenario;
  synchronous.tau = 0.0;

  PowerComparison out;
  out.anoma = minimize_power(scenario);
  out.noma = minimize_power(synchronous);
  if (out.anoma.feasible && out.noma.feasible) {
    out.region = FeasibilityRegion::kA;
    out.delta = out.noma.weighted_sum - out.anoma.weighted_sum;
  } else if (out.anoma.feasible) {
    out.region = FeasibilityRegion::kB;
  } else if (out.noma.feasible) {
    out.region = FeasibilityRegion::kD;
  } else {
    out.region = FeasibilityRegion::kC;
  }
  return out;
}

}  // namespace canoma
