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

#include "canoma/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace canoma {
namespace {

void require_nonnegative(double value, const char* field) {
  if (!std::isfinite(value)) throw ValidationError(field, "must be finite");
  if (value < 0.0) throw ValidationError(field, "must be >= 0");
}

void require_positive(double value, const char* field) {
  if (!std::isfinite(value)) throw ValidationError(field, "must be finite");
  if (value <= 0.0) throw ValidationError(field, "must be > 0");
}

void require_tau(double tau, const char* field) {
  if (!std::isfinite(tau) || tau < 0.0 || tau >= 1.0) {
    throw ValidationError(field, "must lie in [0, 1)");
  }
}

}  // namespace

void LinkChannels::validate() const {
  require_nonnegative(h1_sq, "channels.h1_sq");
  require_nonnegative(h2_sq, "channels.h2_sq");
  require_nonnegative(h12_sq, "channels.h12_sq");
}

void FrameConfig::validate() const {
  if (n < 1) throw ValidationError("frame.n", "must be >= 1");
  require_tau(tau, "frame.tau");
}

void PowerAllocation::validate() const {
  require_nonnegative(p1, "powers.p1");
  require_nonnegative(p2, "powers.p2");
  require_nonnegative(pr, "powers.pr");
}

void PowerScenario::validate() const {
  channels.validate();
  require_nonnegative(r1_star, "qos.r1_star");
  require_nonnegative(r2_star, "qos.r2_star");
  require_nonnegative(omega_s, "weights.omega_s");
  require_nonnegative(omega_r, "weights.omega_r");
  if (std::abs(omega_s + omega_r - 1.0) > kWeightSumTolerance) {
    throw ValidationError("weights", "omega_s + omega_r must equal 1");
  }
  require_positive(ps_max, "limits.ps_max");
  require_positive(pr_max, "limits.pr_max");
  require_tau(tau, "frame.tau");
  if (n_star < 1) throw ValidationError("n_star", "must be >= 1");
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::kCase1: return "case1";
    case CaseLabel::kCase2: return "case2";
    case CaseLabel::kCase3a: return "case3a";
    case CaseLabel::kCase3b: return "case3b";
    case CaseLabel::kGridSearch: return "grid";
    case CaseLabel::kInfeasible: return "infeasible";
  }
  return "unknown";
}

std::string_view to_string(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::kP1FloorExceedsPsMax: return "P1_FLOOR_EXCEEDS_PSMAX";
    case InfeasibleReason::kZeta2ExceedsBudget: return "ZETA2_EXCEEDS_BUDGET";
  }
  return "unknown";
}

double q_of_tau(double tau) {
  require_tau(tau, "tau");
  return 2.0 * tau * (1.0 - tau);
}

StrongUserSnrs strong_user_snrs(const LinkChannels& channels, const PowerAllocation& powers) {
  return {powers.p1 * channels.h1_sq, powers.p2 * channels.h1_sq};
}

WeakUserSnrs weak_user_snrs(const LinkChannels& channels, const PowerAllocation& powers) {
  return {powers.p1 * channels.h2_sq,
          powers.p2 * channels.h2_sq / (1.0 + powers.pr * channels.h12_sq)};
}

ReceiveSnrs derive_snrs(const LinkChannels& channels, const PowerAllocation& powers) {
  channels.validate();
  powers.validate();
  return {strong_user_snrs(channels, powers), weak_user_snrs(channels, powers)};
}

double sinr_from_rate(double rate) { return std::expm1(2.0 * rate * std::numbers::ln2); }

double rate_from_sinr(double sinr) { return 0.5 * std::log1p(sinr) / std::numbers::ln2; }

double weighted_sum_power(const PowerAllocation& powers, double omega_s, double omega_r) {
  return omega_s * (powers.p1 + powers.p2) + omega_r * powers.pr;
}

}  // namespace canoma
