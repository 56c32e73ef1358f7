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

// Seeded randomized cross-checks of the whole library.
//
// Each draw takes N uniform in [1, 64], tau uniform in [0.01, 0.99] (or 0),
// and the three channel gains and three powers log-uniform in [0.1, 10].
// Per draw:
//   matrix   matrix-form and closed-form rates agree (relative 1e-8)
//   chain    NOMA <= lower <= asymptote <= upper for both users, strictly
//            when tau >= 0.05 (products of two draws reach SNR 100, where
//            the asymptote-to-upper gap can fall below 1e-9)
//   tau0     the tau = 0 closed forms equal the synchronous rates (1e-12)
//   oracle   minimize_power and brute_force_power agree within
//            omega_s * step + 1e-9, with identical feasibility
// The optimizer scenario uses half the synchronous rates as targets,
// omega_s uniform in [0, 1], ps_max = 2 (p1 + p2) and pr_max = 2 pr.

#ifndef CANOMA_EXPERIMENT_CAMPAIGN_HPP_
#define CANOMA_EXPERIMENT_CAMPAIGN_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "canoma/experiment/result_table.hpp"

namespace canoma::experiment {

inline constexpr double kMatrixRelTolerance = 1e-8;
inline constexpr double kReductionTolerance = 1e-12;
inline constexpr double kStrictChainMinTau = 0.05;

// Uniform doubles from the raw engine output, so draws do not depend on the
// standard library's distribution implementations.
class CampaignRng {
 public:
  explicit CampaignRng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  double log_uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive

 private:
  std::mt19937_64 engine_;
};

struct CampaignOptions {
  std::uint64_t seed = 1;
  int draws = 200;
  bool force_tau_zero = false;
};

struct CampaignSummary {
  int draws = 0;
  double max_matrix_rel_error = 0.0;
  double max_reduction_error = 0.0;
  double max_oracle_excess = 0.0;  // |optimizer - oracle| minus its allowance
  int matrix_checked = 0;
  int failed_draws = 0;
  std::vector<std::string> failures;  // one line per failed check

  bool passed() const { return failed_draws == 0; }
};

struct CampaignResult {
  ResultTable table;
  CampaignSummary summary;
};

// Throws std::invalid_argument for draws < 1.
CampaignResult random_campaign(const CampaignOptions& options);

// Multi-line text report of a summary.
std::string describe(const CampaignSummary& summary);

}  // namespace canoma::experiment

#endif  // CANOMA_EXPERIMENT_CAMPAIGN_HPP_
