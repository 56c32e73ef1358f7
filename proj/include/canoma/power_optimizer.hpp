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

// Weighted-sum power minimization under QoS constraints.
//
// The exact finite-frame rate constraints are replaced by the asymptotic lower
// bounds, and the own-message constraint of User 1 is tightened by eps* so it
// holds for every frame length N >= n_star. P1 then sits at its floor, Pr at
// the least value meeting the weak-user constraint, and the remaining
// objective is piecewise linear in P2 on [zeta2, ps_max - p1_floor]:
//
//   omega_s * P2 + omega_r * max(0, gamma2/|h12|^2 - relay_slope * P2)
//
// with the kink at P2 = zeta2*. The three cases below follow from where the
// kink falls relative to the interval.

#ifndef CANOMA_POWER_OPTIMIZER_HPP_
#define CANOMA_POWER_OPTIMIZER_HPP_

#include <optional>

#include "canoma/model.hpp"

namespace canoma {

struct QosDerived {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double epsilon_star = 0.0;
  double gamma1_eff = 0.0;  // gamma1 + epsilon_star
  double q = 0.0;
};

struct Thresholds {
  double zeta2 = 0.0;       // least feasible P2
  double zeta2_star = 0.0;  // P2 at which the relay requirement reaches zero
  double p1_floor = 0.0;    // gamma1_eff / |h1|^2
  double p2_ceiling = 0.0;  // ps_max - p1_floor
  // d(required Pr)/d(P2) magnitude at P1 = p1_floor.
  double relay_slope = 0.0;
};

// 2^{2 r1} (2^{(tau / n_star) r1} - 1).
double epsilon_star(double r1_star, double tau, int n_star);

QosDerived derive_qos(const PowerScenario& scenario);

// Throws DegenerateChannelError if any channel gain is zero.
Thresholds compute_thresholds(const PowerScenario& scenario);
Thresholds compute_thresholds(const PowerScenario& scenario, const QosDerived& qos);

// Least relay power meeting the weak-user lower-bound constraint for (p1, p2).
double zeta_r(const PowerScenario& scenario, double p1, double p2);

PowerSolution minimize_power(const PowerScenario& scenario);
// Same, with the derived targets supplied by the caller.
PowerSolution minimize_power(const PowerScenario& scenario, const QosDerived& qos);

// Grid search over P2 with P1 at its floor and Pr = zeta_r. Used to check
// minimize_power. Requires 0 < p2_step <= 1e-3 * ps_max.
PowerSolution brute_force_power(const PowerScenario& scenario, double p2_step);

// Exact finite-frame rate minus target for each constraint.
struct QosSlacks {
  double own_strong = 0.0;
  double cross_strong = 0.0;
  double weak = 0.0;

  double min() const;
};

inline constexpr double kQosSlackTolerance = 1e-9;

// Throws std::invalid_argument for an infeasible solution.
QosSlacks verify_qos(const PowerSolution& solution, const PowerScenario& scenario, int n);

// A: both feasible, B: asynchronous only, C: neither, D: synchronous only.
enum class FeasibilityRegion { kA, kB, kC, kD };

std::string_view to_string(FeasibilityRegion region);

struct PowerComparison {
  PowerSolution anoma;
  PowerSolution noma;
  FeasibilityRegion region = FeasibilityRegion::kC;
  // noma - anoma weighted sum; set only in region A.
  std::optional<double> delta;
};

// Runs minimize_power at the scenario's tau and at tau = 0.
PowerComparison compare_weighted_power(const PowerScenario& scenario);

}  // namespace canoma

#endif  // CANOMA_POWER_OPTIMIZER_HPP_
