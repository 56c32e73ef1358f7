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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "canoma/closed_form.hpp"
#include "canoma/power_optimizer.hpp"
#include "support/oracles.hpp"

namespace canoma {
namespace {

// Parameters of the fig8 preset with both SINR targets at 1.
PowerScenario grid_scenario(double gamma1, double gamma2, double tau) {
  PowerScenario sc;
  sc.channels = {1.0, 0.5, 2.0};
  sc.r1_star = rate_from_sinr(gamma1);
  sc.r2_star = rate_from_sinr(gamma2);
  sc.tau = tau;
  return sc;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

PowerScenario random_scenario(oracle::Gen& gen) {
  PowerScenario sc;
  sc.channels = {gen.log_uniform(0.1, 10.0), gen.log_uniform(0.1, 10.0), gen.log_uniform(0.1, 10.0)};
  sc.r1_star = gen.uniform(0.0, 2.0);
  sc.r2_star = gen.uniform(0.0, 2.0);
  sc.omega_s = gen.unit();
  sc.omega_r = 1.0 - sc.omega_s;
  sc.ps_max = gen.log_uniform(1.0, 50.0);
  sc.pr_max = gen.log_uniform(0.1, 10.0);
  sc.tau = gen.uniform(0.0, 0.99);
  return sc;
}

TEST_CASE("epsilon star") {
  CHECK(epsilon_star(1.0, 0.0, 100) == 0.0);
  CHECK(epsilon_star(0.0, 0.5, 100) == 0.0);
  CHECK(near(epsilon_star(1.0, 0.5, 100), 0.013887, 1e-6));
  CHECK(near(epsilon_star(1.0, 0.5, 100), 4.0 * (std::pow(2.0, 0.005) - 1.0), 1e-15));
  CHECK_THROWS_AS(epsilon_star(1.0, 0.5, 0), ValidationError);
}

TEST_CASE("thresholds") {
  const Thresholds t0 = compute_thresholds(grid_scenario(1.0, 1.0, 0.0));
  CHECK(near(t0.zeta2, 2.0, 1e-12));
  CHECK(near(t0.zeta2_star, 3.0, 1e-12));
  CHECK(near(t0.p1_floor, 1.0, 1e-12));
  CHECK(near(t0.p2_ceiling, 19.0, 1e-12));

  // Hand evaluation with eps* = 0.013887 and Q = 0.5.
  const PowerScenario sc = grid_scenario(1.0, 1.0, 0.5);
  QosDerived qos = derive_qos(sc);
  qos.epsilon_star = epsilon_star(1.0, 0.5, 100);
  qos.gamma1_eff = qos.gamma1 + qos.epsilon_star;
  const Thresholds t = compute_thresholds(sc, qos);
  const double g = 1.0 + epsilon_star(1.0, 0.5, 100);
  CHECK(near(t.zeta2, (1.0 + g) / (1.0 + 0.25 * g), 1e-12));
  CHECK(near(t.zeta2_star, 2.0 * (1.0 + 0.5 * g) / (1.0 + 0.125 * g), 1e-12));
  // Rounded hand values.
  CHECK(near(t.zeta2, 1.606645, 5e-5));
  CHECK(near(t.zeta2_star, 2.674864, 5e-5));
  CHECK(near(t.p1_floor, 1.013887, 1e-6));

  const Thresholds none = compute_thresholds(grid_scenario(1.0, 0.0, 0.5));
  CHECK(none.zeta2 == 0.0);
  CHECK(none.zeta2_star == 0.0);

  PowerScenario dead = grid_scenario(1.0, 1.0, 0.5);
  dead.channels.h12_sq = 0.0;
  CHECK_THROWS_AS(compute_thresholds(dead), DegenerateChannelError);
}

TEST_CASE("relay power requirement") {
  const PowerScenario sc = grid_scenario(1.0, 1.0, 0.0);
  CHECK(near(zeta_r(sc, 1.0, 2.0), 1.0 / 6.0, 1e-12));
  CHECK(zeta_r(sc, 1.0, 100.0) == 0.0);
  CHECK(zeta_r(grid_scenario(1.0, 0.0, 0.5), 1.0, 0.5) == 0.0);
}

TEST_CASE("synchronous worked example") {
  const PowerSolution s = minimize_power(grid_scenario(1.0, 1.0, 0.0));
  REQUIRE(s.feasible);
  CHECK(s.case_label == CaseLabel::kCase3b);
  CHECK(near(s.allocation.p1, 1.0, 1e-12));
  CHECK(near(s.allocation.p2, 2.0, 1e-12));
  CHECK(near(s.allocation.pr, 1.0 / 6.0, 1e-12));
  CHECK(near(s.weighted_sum, 0.733333, 1e-6));
}

TEST_CASE("asynchronous worked example") {
  const PowerScenario sc = grid_scenario(1.0, 1.0, 0.5);
  const PowerSolution s = minimize_power(sc);
  const oracle::PowerTrace t = oracle::trace_power(sc);
  REQUIRE(s.feasible);
  REQUIRE(t.feasible);
  CHECK(near(s.weighted_sum, t.sum, 1e-12));
  CHECK(near(s.allocation.p2, t.p2, 1e-12));
  // Oracle value, frozen: eps* = 2 (2^{0.0025} - 1) for gamma1 = 1.
  CHECK(near(s.weighted_sum, 0.680962, 1e-6));
  CHECK(near(s.allocation.p1, 1.003469, 1e-6));
  CHECK(near(s.allocation.p2, 1.601664, 1e-6));
  CHECK(near(s.allocation.pr, 0.199919, 1e-6));

  // Same trace with eps* evaluated at a unit rate target.
  QosDerived qos = derive_qos(sc);
  qos.epsilon_star = epsilon_star(1.0, 0.5, 100);
  qos.gamma1_eff = qos.gamma1 + qos.epsilon_star;
  const PowerSolution u = minimize_power(sc, qos);
  CHECK(near(u.weighted_sum, 0.683851, 1e-6));
  CHECK(near(u.allocation.p2, 1.606645, 5e-5));
  CHECK(near(u.allocation.pr, 0.199679, 1e-6));
  CHECK(near(u.weighted_sum, oracle::trace_power(sc, qos.epsilon_star).sum, 1e-12));
}

TEST_CASE("infeasible scenarios name the violated bound") {
  const PowerSolution a = minimize_power(grid_scenario(30.0, 1.0, 0.5));
  CHECK_FALSE(a.feasible);
  CHECK(a.case_label == CaseLabel::kInfeasible);
  CHECK(a.infeasible_reason == InfeasibleReason::kP1FloorExceedsPsMax);
  CHECK(a.weighted_sum == 0.0);

  const PowerSolution b = minimize_power(grid_scenario(1.0, 30.0, 0.5));
  CHECK_FALSE(b.feasible);
  CHECK(b.infeasible_reason == InfeasibleReason::kZeta2ExceedsBudget);

  const PowerSolution g = brute_force_power(grid_scenario(1.0, 30.0, 0.5), 1e-3);
  CHECK_FALSE(g.feasible);
  CHECK(g.infeasible_reason == InfeasibleReason::kZeta2ExceedsBudget);
}

TEST_CASE("case selection") {
  // Relay far away: relaying is never needed past the strong-user floor.
  PowerScenario c1 = grid_scenario(1.0, 1.0, 0.5);
  c1.channels = {1.0, 2.0, 0.5};
  const PowerSolution s1 = minimize_power(c1);
  CHECK(s1.case_label == CaseLabel::kCase1);
  CHECK(s1.allocation.pr == 0.0);

  // Tiny BS budget: the relay is still needed at P2 = ceiling.
  PowerScenario c2 = grid_scenario(1.0, 1.0, 0.0);
  c2.channels = {1.0, 0.1, 2.0};
  c2.ps_max = 5.0;
  c2.omega_s = 0.01;
  c2.omega_r = 0.99;
  const Thresholds th2 = compute_thresholds(c2);
  REQUIRE(th2.zeta2_star > th2.p2_ceiling);
  const PowerSolution s2 = minimize_power(c2);
  CHECK(s2.case_label == CaseLabel::kCase2);
  // omega_s < omega_r * slope here, so the BS spends its whole budget.
  CHECK(c2.omega_s < c2.omega_r * th2.relay_slope);
  CHECK(near(s2.allocation.p2, th2.p2_ceiling, 1e-12));
  CHECK_FALSE(s2.weight_tie);

  // Weights exactly at the critical ratio.
  PowerScenario tie = c2;
  tie.omega_s = th2.relay_slope / (1.0 + th2.relay_slope);
  tie.omega_r = 1.0 - tie.omega_s;
  const PowerSolution st = minimize_power(tie);
  CHECK(st.case_label == CaseLabel::kCase2);
  CHECK(st.weight_tie);
  CHECK(near(st.allocation.p2, th2.zeta2, 1e-12));

  // Relay power is free: sub-problem A (no relay) loses to relaying.
  PowerScenario c3 = grid_scenario(1.0, 1.0, 0.0);
  c3.omega_s = 1.0;
  c3.omega_r = 0.0;
  CHECK(minimize_power(c3).case_label == CaseLabel::kCase3b);
  // BS power is free: no relay.
  c3.omega_s = 0.0;
  c3.omega_r = 1.0;
  const PowerSolution s3a = minimize_power(c3);
  CHECK(s3a.case_label == CaseLabel::kCase3a);
  CHECK(s3a.allocation.pr == 0.0);
}

TEST_CASE("optimizer agrees with the breakpoint oracle and the grid search") {
  oracle::Gen gen(101);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const PowerScenario sc = random_scenario(gen);
    const PowerSolution s = minimize_power(sc);
    const oracle::PowerTrace t = oracle::trace_power(sc);
    REQUIRE(s.feasible == t.feasible);
    const double step = 1e-3 * sc.ps_max;
    const PowerSolution g = brute_force_power(sc, step);
    REQUIRE(g.feasible == s.feasible);
    if (!s.feasible) continue;
    ++feasible;
    CHECK(near(s.weighted_sum, t.sum, 1e-9 * std::max(1.0, t.sum)));
    CHECK(g.weighted_sum >= s.weighted_sum - 1e-9);
    CHECK(g.weighted_sum - s.weighted_sum <= sc.omega_s * step + 1e-9);
  }
  CHECK(feasible > 100);
}

TEST_CASE("returned solutions sit on the constraint boundary") {
  oracle::Gen gen(103);
  for (int trial = 0; trial < 400; ++trial) {
    const PowerScenario sc = random_scenario(gen);
    const PowerSolution s = minimize_power(sc);
    if (!s.feasible) continue;
    const Thresholds th = compute_thresholds(sc);
    CHECK(s.allocation.p1 == th.p1_floor);
    if (s.case_label == CaseLabel::kCase1) CHECK(s.allocation.pr == 0.0);
    const double pr = std::clamp(zeta_r(sc, s.allocation.p1, s.allocation.p2), 0.0, sc.pr_max);
    CHECK(near(s.allocation.pr, pr, 1e-9 * std::max(1.0, pr)));
    CHECK(s.allocation.p1 + s.allocation.p2 <= sc.ps_max * (1.0 + 1e-12));
  }
}

TEST_CASE("dominance and nesting without the finite-frame margin") {
  oracle::Gen gen(107);
  for (int trial = 0; trial < 2000; ++trial) {
    PowerScenario sc = random_scenario(gen);
    sc.tau = gen.uniform(0.01, 0.99);
    QosDerived qos = derive_qos(sc);
    qos.epsilon_star = 0.0;
    qos.gamma1_eff = qos.gamma1;
    const PowerSolution anoma = minimize_power(sc, qos);
    PowerScenario sync = sc;
    sync.tau = 0.0;
    const PowerSolution noma = minimize_power(sync);
    if (noma.feasible) {
      CHECK(anoma.feasible);
      if (anoma.feasible) CHECK(anoma.weighted_sum <= noma.weighted_sum + 1e-12);
    }
  }
}

TEST_CASE("weighted sum grows with either target on the preset grid") {
  for (double tau : {0.0, 0.5}) {
    for (int i = 0; i < 40; ++i) {
      double prev = -1.0;
      for (int j = 0; j < 40; ++j) {
        const PowerSolution s =
            minimize_power(grid_scenario(0.1 + 29.9 * i / 39.0, 0.1 + 29.9 * j / 39.0, tau));
        if (!s.feasible) break;
        CHECK(s.weighted_sum >= prev);
        prev = s.weighted_sum;
      }
      prev = -1.0;
      for (int j = 0; j < 40; ++j) {
        const PowerSolution s =
            minimize_power(grid_scenario(0.1 + 29.9 * j / 39.0, 0.1 + 29.9 * i / 39.0, tau));
        if (!s.feasible) break;
        CHECK(s.weighted_sum >= prev);
        prev = s.weighted_sum;
      }
    }
  }
}

TEST_CASE("finite-frame QoS check") {
  const PowerScenario sc = grid_scenario(1.0, 1.0, 0.5);
  const QosSlacks s = verify_qos(minimize_power(sc), sc, 100);
  CHECK(s.min() >= -kQosSlackTolerance);

  const PowerScenario sync = grid_scenario(1.0, 1.0, 0.0);
  for (int n : {1, 10, 1000}) {
    const QosSlacks z = verify_qos(minimize_power(sync), sync, n);
    CHECK(z.min() >= -kQosSlackTolerance);
    CHECK(std::abs(z.own_strong) <= 1e-9);
    CHECK(std::abs(z.weak) <= 1e-9);
  }

  const PowerScenario zero = grid_scenario(0.0, 0.0, 0.5);
  PowerSolution any;
  any.feasible = true;
  any.allocation = {1.0, 2.0, 0.5};
  const QosSlacks raw = verify_qos(any, zero, 50);
  const RateReport r = anoma_rates({50, 0.5}, zero.channels, any.allocation);
  CHECK(raw.own_strong == r.r_own_strong);
  CHECK(raw.cross_strong == r.r_cross_strong);
  CHECK(raw.weak == r.r_weak);

  CHECK_THROWS_AS(verify_qos(PowerSolution{}, sc, 100), std::invalid_argument);
}

TEST_CASE("small user-1 targets can leave the weak user short at N = 100") {
  // With P1 near 0.1 the Q-dependent gain in the lower bound is smaller than
  // the 2N + tau normalization loss, so the finite frame falls below target.
  const PowerScenario sc = grid_scenario(0.1, 0.1 + 29.9 * 12 / 39.0, 0.5);
  const PowerSolution s = minimize_power(sc);
  REQUIRE(s.feasible);
  const QosSlacks at100 = verify_qos(s, sc, 100);
  CHECK(at100.weak < -kQosSlackTolerance);
  CHECK(at100.own_strong >= 0.0);
  CHECK(at100.cross_strong >= 0.0);
  CHECK(verify_qos(s, sc, 100000).weak >= 0.0);
}

TEST_CASE("comparison") {
  const PowerComparison c = compare_weighted_power(grid_scenario(1.0, 1.0, 0.5));
  CHECK(c.region == FeasibilityRegion::kA);
  REQUIRE(c.delta.has_value());
  CHECK(near(c.anoma.weighted_sum, 0.680962, 1e-6));
  CHECK(near(c.noma.weighted_sum, 0.733333, 1e-6));
  CHECK(near(*c.delta, 0.052371, 1e-6));

  const PowerComparison z = compare_weighted_power(grid_scenario(0.0, 0.0, 0.5));
  CHECK(z.anoma.weighted_sum == 0.0);
  CHECK(z.noma.weighted_sum == 0.0);
  CHECK(*z.delta == 0.0);

  const PowerComparison far = compare_weighted_power(grid_scenario(30.0, 30.0, 0.5));
  CHECK(far.region == FeasibilityRegion::kC);
  CHECK_FALSE(far.delta.has_value());
  CHECK(to_string(FeasibilityRegion::kB) == "B");
}

}  // namespace
}  // namespace canoma
