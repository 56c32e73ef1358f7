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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace canoma::oracle {

Eigen::MatrixXd gram(int n, double tau) {
  const int m = 2 * n;
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(m, m);
  for (int k = 0; k + 1 < m; ++k) {
    r(k, k + 1) = r(k + 1, k) = (k % 2 == 0) ? 1.0 - tau : tau;
  }
  return r;
}

Eigen::MatrixXd selector(int n, int parity) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * n, n);
  for (int k = 0; k < n; ++k) g(2 * k + parity, k) = 1.0;
  return g;
}

double log2_abs_det(const Eigen::MatrixXd& a) {
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const Eigen::MatrixXd& f = lu.matrixLU();
  double s = 0.0;
  for (Eigen::Index i = 0; i < f.rows(); ++i) s += std::log2(std::abs(f(i, i)));
  return s;
}

double rate_own(int n, double tau, double mu1) {
  const Eigen::MatrixXd r = gram(n, tau);
  const Eigen::MatrixXd g1 = selector(n, 0);
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(2 * n, 2 * n) + mu1 * g1 * g1.transpose() * r;
  return log2_abs_det(a) / (2.0 * n + tau);
}

double rate_cross(int n, double tau, double mu1, double mu2) {
  const Eigen::MatrixXd r = gram(n, tau);
  const Eigen::MatrixXd g1 = selector(n, 0);
  const Eigen::MatrixXd g2 = selector(n, 1);
  const Eigen::MatrixXd noise = r + mu1 * r * g1 * g1.transpose() * r;
  const Eigen::MatrixXd total = noise + mu2 * r * g2 * g2.transpose() * r;
  return (log2_abs_det(total) - log2_abs_det(noise)) / (2.0 * n + tau);
}

double rate_weak(int n, double tau, const LinkChannels& ch, const PowerAllocation& p) {
  const Eigen::MatrixXd r = gram(n, tau);
  const int m = 2 * n;
  Eigen::MatrixXd w1 = Eigen::MatrixXd::Zero(m + n, n);
  w1.topRows(m) = std::sqrt(p.p1 * ch.h2_sq) * r * selector(n, 0);
  Eigen::MatrixXd w2 = Eigen::MatrixXd::Zero(m + n, n);
  w2.topRows(m) = std::sqrt(p.p2 * ch.h2_sq) * r * selector(n, 1);
  w2.bottomRows(n) = std::sqrt(p.pr * ch.h12_sq) * Eigen::MatrixXd::Identity(n, n);

  Eigen::MatrixXd noise = Eigen::MatrixXd::Identity(m + n, m + n);
  noise.topLeftCorner(m, m) = r;
  const Eigen::MatrixXd interference = noise + w1 * w1.transpose();
  const Eigen::MatrixXd total = interference + w2 * w2.transpose();
  return (log2_abs_det(total) - log2_abs_det(interference)) / (2.0 * n + tau);
}

PowerTrace trace_power(const PowerScenario& sc, double eps_override) {
  const double h1 = sc.channels.h1_sq, h2 = sc.channels.h2_sq, h12 = sc.channels.h12_sq;
  const double g1 = std::pow(2.0, 2.0 * sc.r1_star) - 1.0;
  const double g2 = std::pow(2.0, 2.0 * sc.r2_star) - 1.0;
  const double eps = eps_override >= 0.0
                         ? eps_override
                         : std::pow(2.0, 2.0 * sc.r1_star) *
                               (std::pow(2.0, sc.tau / sc.n_star * sc.r1_star) - 1.0);
  const double q = 2.0 * sc.tau * (1.0 - sc.tau);

  PowerTrace t;
  t.p1 = (g1 + eps) / h1;
  const double budget = sc.ps_max - t.p1;
  if (budget < 0.0) return {};

  // User 1 decodes User 2's message: lower-bound SINR reaches gamma2.
  const double mu1 = t.p1 * h1;
  const double p2_strong = g2 * (1.0 + mu1) / (h1 * (1.0 + 0.5 * q * mu1));
  // Weak user: gamma2/h12 - P2 * gain is the relay power still needed.
  const double gain = (h2 / h12) * (1.0 + 0.5 * q * t.p1 * h2) / (1.0 + t.p1 * h2);
  const auto relay_needed = [&](double p2) { return std::max(0.0, g2 / h12 - p2 * gain); };
  const double p2_relay_cap = (g2 / h12 - sc.pr_max) / gain;
  const double lo = std::max({0.0, p2_strong, p2_relay_cap});
  if (lo > budget) return {};

  std::vector<double> candidates = {lo, budget};
  const double kink = g2 / h12 / gain;
  if (kink > lo && kink < budget) candidates.push_back(kink);

  t.sum = INFINITY;
  for (double p2 : candidates) {
    const double pr = relay_needed(p2);
    const double s = sc.omega_s * (t.p1 + p2) + sc.omega_r * pr;
    if (s < t.sum) {
      t.sum = s;
      t.p2 = p2;
      t.pr = pr;
    }
  }
  t.feasible = true;
  return t;
}

double Gen::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

}  // namespace canoma::oracle
