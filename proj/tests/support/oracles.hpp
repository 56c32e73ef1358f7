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

// Reference computations used only by the tests. Nothing here calls into the
// library's rate or optimizer code.

#ifndef CANOMA_TESTS_SUPPORT_ORACLES_HPP_
#define CANOMA_TESTS_SUPPORT_ORACLES_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "canoma/model.hpp"

namespace canoma::oracle {

// Dense 2N x 2N sample correlation matrix, built entry by entry.
Eigen::MatrixXd gram(int n, double tau);
// 2N x N selector of the even (parity 0) or odd (parity 1) samples.
Eigen::MatrixXd selector(int n, int parity);
// log2 |det A| through LU with partial pivoting; A need not be symmetric.
double log2_abs_det(const Eigen::MatrixXd& a);

double rate_own(int n, double tau, double mu1);
double rate_cross(int n, double tau, double mu1, double mu2);
// Stacked [broadcast; relay] observation without any reordering.
double rate_weak(int n, double tau, const LinkChannels& ch, const PowerAllocation& p);

// Minimum of the relaxed power problem by enumerating the breakpoints of the
// piecewise-linear objective in P2. eps_override < 0 means "compute eps*".
struct PowerTrace {
  bool feasible = false;
  double p1 = 0.0;
  double p2 = 0.0;
  double pr = 0.0;
  double sum = 0.0;
};
PowerTrace trace_power(const PowerScenario& sc, double eps_override = -1.0);

// Deterministic generator for the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double log_uniform(double lo, double hi);
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % (hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace canoma::oracle

#endif  // CANOMA_TESTS_SUPPORT_ORACLES_HPP_
