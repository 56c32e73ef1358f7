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

#include <cmath>
#include <string>

#include "canoma/model.hpp"

namespace canoma {
namespace {

std::string field_of(const auto& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "<no error>";
}

TEST_CASE("q_of_tau is symmetric and peaks at one half") {
  CHECK(q_of_tau(0.0) == 0.0);
  CHECK(q_of_tau(0.5) == doctest::Approx(0.5));
  CHECK(q_of_tau(0.2) == doctest::Approx(q_of_tau(0.8)));
  CHECK_THROWS_AS(q_of_tau(1.0), ValidationError);
  CHECK_THROWS_AS(q_of_tau(-0.1), ValidationError);
}

TEST_CASE("rate and SINR conversions are inverse") {
  CHECK(sinr_from_rate(0.5) == doctest::Approx(1.0));
  CHECK(sinr_from_rate(1.0) == doctest::Approx(3.0));
  CHECK(sinr_from_rate(0.0) == 0.0);
  for (double g : {1e-12, 0.1, 1.0, 30.0, 1e6}) {
    CHECK(std::abs(sinr_from_rate(rate_from_sinr(g)) - g) <= 1e-12 * g);
  }
}

TEST_CASE("receive SNRs follow the link gains") {
  const LinkChannels ch{2.0, 0.5, 4.0};
  const PowerAllocation p{1.0, 3.0, 0.25};
  const ReceiveSnrs s = derive_snrs(ch, p);
  CHECK(s.strong.mu1 == doctest::Approx(2.0));
  CHECK(s.strong.mu2 == doctest::Approx(6.0));
  CHECK(s.weak.nu1 == doctest::Approx(0.5));
  // Relay copy of the same symbol scales down the broadcast-only SNR.
  CHECK(s.weak.nu2 == doctest::Approx(1.5 / 2.0));
}

TEST_CASE("validation reports the offending field") {
  CHECK(field_of([] { LinkChannels{-1.0, 1.0, 1.0}.validate(); }) == "channels.h1_sq");
  CHECK(field_of([] { LinkChannels{1.0, 1.0, NAN}.validate(); }) == "channels.h12_sq");
  CHECK(field_of([] { FrameConfig{0, 0.5}.validate(); }) == "frame.n");
  CHECK(field_of([] { FrameConfig{4, 1.0}.validate(); }) == "frame.tau");
  CHECK(field_of([] { PowerAllocation{1.0, -2.0, 0.0}.validate(); }) == "powers.p2");

  PowerScenario sc;
  sc.channels = {1.0, 0.5, 2.0};
  CHECK_NOTHROW(sc.validate());
  sc.omega_s = 0.1;
  CHECK(field_of([&] { sc.validate(); }) == "weights");
  sc.omega_s = 0.2;
  sc.pr_max = 0.0;
  CHECK(field_of([&] { sc.validate(); }) == "limits.pr_max");
  sc.pr_max = 5.0;
  sc.n_star = 0;
  CHECK(field_of([&] { sc.validate(); }) == "n_star");
}

TEST_CASE("weighted sum power") {
  CHECK(weighted_sum_power({1.0, 2.0, 0.5}, 0.2, 0.8) == doctest::Approx(1.0));
  CHECK(weighted_sum_power({0.0, 0.0, 0.0}, 0.5, 0.5) == 0.0);
}

TEST_CASE("labels") {
  CHECK(to_string(CaseLabel::kCase3b) == "case3b");
  CHECK(to_string(CaseLabel::kInfeasible) == "infeasible");
  CHECK(to_string(InfeasibleReason::kP1FloorExceedsPsMax) == "P1_FLOOR_EXCEEDS_PSMAX");
  CHECK(to_string(InfeasibleReason::kZeta2ExceedsBudget) == "ZETA2_EXCEEDS_BUDGET");
}

}  // namespace
}  // namespace canoma
