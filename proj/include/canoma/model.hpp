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

// Core value types for the two-user cooperative downlink: a base station
// superposes the messages of a strong user (User 1, also the relay) and a weak
// user (User 2), optionally with a deliberate sub-symbol timing offset between
// the two streams. All gains and powers are linear and noise-normalized; all
// rates are in bits per channel use.

#ifndef CANOMA_MODEL_HPP_
#define CANOMA_MODEL_HPP_

#include <optional>
#include <string_view>

#include "canoma/errors.hpp"

namespace canoma {

// Squared channel magnitudes.
struct LinkChannels {
  double h1_sq = 0.0;   // BS -> User 1
  double h2_sq = 0.0;   // BS -> User 2
  double h12_sq = 0.0;  // User 1 -> User 2 (relay link)

  void validate() const;
};

// Frame length (symbols) and normalized timing mismatch.
struct FrameConfig {
  int n = 1;
  double tau = 0.0;

  void validate() const;
};

// Transmit powers: the base station split (p1, p2) and the relay power pr.
struct PowerAllocation {
  double p1 = 0.0;
  double p2 = 0.0;
  double pr = 0.0;

  void validate() const;
};

// Receive SNRs at the strong user: mu1 = p1*|h1|^2, mu2 = p2*|h1|^2.
struct StrongUserSnrs {
  double mu1 = 0.0;
  double mu2 = 0.0;
};

// Effective SNRs at the weak user: nu1 = p1*|h2|^2,
// nu2 = p2*|h2|^2 / (1 + pr*|h12|^2).
struct WeakUserSnrs {
  double nu1 = 0.0;
  double nu2 = 0.0;
};

struct ReceiveSnrs {
  StrongUserSnrs strong;
  WeakUserSnrs weak;
};

// Throughputs of one system variant.
struct RateReport {
  double r_own_strong = 0.0;    // User 1 decoding its own message
  double r_cross_strong = 0.0;  // User 1 decoding User 2's message
  double r_weak = 0.0;          // User 2 decoding its own message
};

// Full input of the weighted-sum power minimization.
struct PowerScenario {
  LinkChannels channels;
  double r1_star = 0.0;  // target rate of User 1's message
  double r2_star = 0.0;  // target rate of User 2's message
  double omega_s = 0.2;
  double omega_r = 0.8;
  double ps_max = 20.0;
  double pr_max = 5.0;
  double tau = 0.5;
  int n_star = 100;  // guaranteed minimum frame length

  void validate() const;
};

enum class CaseLabel { kCase1, kCase2, kCase3a, kCase3b, kGridSearch, kInfeasible };

enum class InfeasibleReason { kP1FloorExceedsPsMax, kZeta2ExceedsBudget };

std::string_view to_string(CaseLabel label);
std::string_view to_string(InfeasibleReason reason);

struct PowerSolution {
  PowerAllocation allocation;
  double weighted_sum = 0.0;
  CaseLabel case_label = CaseLabel::kInfeasible;
  bool feasible = false;
  // Case 2 with the BS weight exactly equal to the critical ratio: every P2 in
  // the interval attains the optimum and the lower end was returned.
  bool weight_tie = false;
  std::optional<InfeasibleReason> infeasible_reason;
};

inline constexpr double kWeightSumTolerance = 1e-12;

// 2*tau*(1 - tau); throws ValidationError unless 0 <= tau < 1.
double q_of_tau(double tau);

StrongUserSnrs strong_user_snrs(const LinkChannels& channels, const PowerAllocation& powers);
WeakUserSnrs weak_user_snrs(const LinkChannels& channels, const PowerAllocation& powers);
ReceiveSnrs derive_snrs(const LinkChannels& channels, const PowerAllocation& powers);

// gamma = 2^{2R} - 1 and its inverse.
double sinr_from_rate(double rate);
double rate_from_sinr(double sinr);

double weighted_sum_power(const PowerAllocation& powers, double omega_s, double omega_r);

}  // namespace canoma

#endif  // CANOMA_MODEL_HPP_
