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

// Closed-form throughputs of the asynchronous cooperative link, their
// N -> infinity limits with lower/upper bounds, the synchronous (tau = 0)
// baselines, and a grid search for the best timing mismatch.
//
// The finite-frame forms reduce a tridiagonal determinant to two roots of
// x^2 - a x + q^2/4 with a = 1/s_a + 1/s_b + 1/(s_a s_b) + q. The bracket
// (big^{N+1} - small^{N+1} + tau^2 (big^N - small^N)) / (big - small) is
// evaluated as big^N * (big - small*rho^N + tau^2 (1 - rho^N)) / (big - small)
// with rho = small/big, which stays finite for any N.

#ifndef CANOMA_CLOSED_FORM_HPP_
#define CANOMA_CLOSED_FORM_HPP_

#include "canoma/model.hpp"

namespace canoma {

struct RootPair {
  double big = 0.0;
  double small = 0.0;
};

// NOMA baseline <= lower <= asymptotic <= upper; all equal iff tau = 0.
struct BoundChain {
  double baseline_noma = 0.0;
  double lower = 0.0;
  double asymptotic = 0.0;
  double upper = 0.0;
};

// Throws ValidationError for non-positive SNRs or q outside [0, 0.5].
RootPair characteristic_roots(double snr_a, double snr_b, double q);

// log2 of the bracket above, for frame length n and mismatch tau.
double log2_root_bracket(const RootPair& roots, int n, double tau);

double rate_strong_own(const FrameConfig& frame, double mu1);
double rate_strong_cross(const FrameConfig& frame, const StrongUserSnrs& snrs);
double rate_weak(const FrameConfig& frame, const LinkChannels& channels,
                 const PowerAllocation& powers);

// Synchronous baselines (perfect SIC at User 1, MRC at User 2).
RateReport noma_rates(const LinkChannels& channels, const PowerAllocation& powers);
// Finite-frame asynchronous rates; tau = 0 gives noma_rates.
RateReport anoma_rates(const FrameConfig& frame, const LinkChannels& channels,
                       const PowerAllocation& powers);

// N -> infinity limits written as functions of Q = 2 tau (1 - tau). Both are
// nondecreasing in Q.
double strong_cross_asymptote(const StrongUserSnrs& snrs, double q);
double weak_asymptote(const LinkChannels& channels, const PowerAllocation& powers, double q);

// Require mu1, mu2 > 0 (resp. nu1, nu2 > 0).
BoundChain strong_cross_bounds(const StrongUserSnrs& snrs, double tau);
BoundChain weak_bounds(const LinkChannels& channels, const PowerAllocation& powers, double tau);

enum class TauObjective { kStrongCross, kWeak };

inline constexpr double kDefaultTauGridStep = 0.005;

// Exhaustive search of the finite-frame rate over tau = 0, step, 2*step, ...
// up to 1 - step. Ties go to the smaller tau. grid_step must be in (0, 0.1].
double optimal_tau(int frame_n, TauObjective objective, const LinkChannels& channels,
                   const PowerAllocation& powers, double grid_step = kDefaultTauGridStep);

}  // namespace canoma

#endif  // CANOMA_CLOSED_FORM_HPP_
