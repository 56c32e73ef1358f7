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

#include "canoma/closed_form.hpp"

#include <cmath>
#include <numbers>

namespace canoma {
namespace {

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

double channel_uses(const FrameConfig& frame) { return 2.0 * frame.n + frame.tau; }

void require_snr(double value, const char* field) {
  if (!std::isfinite(value) || value < 0.0) throw ValidationError(field, "must be finite and >= 0");
}

// Finite-frame rate sharing the structure of both users:
//   [N log2(signal_product) + log2(bracket)] / (2N + tau)
// where signal_product is mu1*mu2/(1+mu1) or P1*P2*|h2|^4/(1+P1*|h2|^2).
double finite_frame_rate(const FrameConfig& frame, const RootPair& roots, double signal_product) {
  const double head = frame.n * std::log2(signal_product);
  return (head + log2_root_bracket(roots, frame.n, frame.tau)) / channel_uses(frame);
}

// x = SINR-like term of the synchronous system, y = the Q-dependent cross
// term; the asymptote is (1/2) log2((x + y + sqrt(x^2 + 2xy)) / 2).
double asymptote_from(double x, double y) {
  return 0.5 * std::log2(0.5 * (x + y + std::sqrt(x * x + 2.0 * x * y)));
}

BoundChain chain_from(double x, double y) {
  return {0.5 * std::log2(x), 0.5 * std::log2(x + 0.5 * y), asymptote_from(x, y),
          0.5 * std::log2(x + y)};
}

void require_q(double q) {
  if (!std::isfinite(q) || q < 0.0 || q > 0.5) throw ValidationError("q", "must lie in [0, 0.5]");
}

}  // namespace

RootPair characteristic_roots(double snr_a, double snr_b, double q) {
  if (!std::isfinite(snr_a) || snr_a <= 0.0) throw ValidationError("snr_a", "must be > 0");
  if (!std::isfinite(snr_b) || snr_b <= 0.0) throw ValidationError("snr_b", "must be > 0");
  require_q(q);
  const double a = 1.0 / snr_a + 1.0 / snr_b + 1.0 / (snr_a * snr_b) + q;
  const double big = 0.5 * (a + std::sqrt((a - q) * (a + q)));
  // Vieta: big * small = q^2 / 4; avoids cancellation in a - sqrt(a^2 - q^2).
  return {big, 0.25 * q * q / big};
}

double log2_root_bracket(const RootPair& roots, int n, double tau) {
  const double rho = roots.small / roots.big;
  const double rho_n = std::pow(rho, n);
  const double scaled = (roots.big - roots.small * rho_n + tau * tau * (1.0 - rho_n)) /
                        (roots.big - roots.small);
  return n * std::log2(roots.big) + std::log2(scaled);
}

double rate_strong_own(const FrameConfig& frame, double mu1) {
  frame.validate();
  require_snr(mu1, "mu1");
  return frame.n * log2_1p(mu1) / channel_uses(frame);
}

double rate_strong_cross(const FrameConfig& frame, const StrongUserSnrs& snrs) {
  frame.validate();
  require_snr(snrs.mu1, "mu1");
  require_snr(snrs.mu2, "mu2");
  if (snrs.mu2 == 0.0) return 0.0;
  if (frame.tau == 0.0) return 0.5 * log2_1p(snrs.mu2 / (1.0 + snrs.mu1));
  // No interference: the determinant factors like the own-message one.
  if (snrs.mu1 == 0.0) return frame.n * log2_1p(snrs.mu2) / channel_uses(frame);

  const RootPair roots = characteristic_roots(snrs.mu1, snrs.mu2, q_of_tau(frame.tau));
  return finite_frame_rate(frame, roots, snrs.mu1 * snrs.mu2 / (1.0 + snrs.mu1));
}

double rate_weak(const FrameConfig& frame, const LinkChannels& channels,
                 const PowerAllocation& powers) {
  frame.validate();
  channels.validate();
  powers.validate();
  const double relay_snr = powers.pr * channels.h12_sq;
  const WeakUserSnrs snrs = weak_user_snrs(channels, powers);

  if (frame.tau == 0.0) {
    return 0.5 * log2_1p(relay_snr + powers.p2 * channels.h2_sq / (1.0 + snrs.nu1));
  }
  const double per_symbol = frame.n / channel_uses(frame);
  // Nothing of User 2 arrives over the broadcast link; only the relay block counts.
  if (snrs.nu2 == 0.0) return per_symbol * log2_1p(relay_snr);
  if (snrs.nu1 == 0.0) return per_symbol * (log2_1p(relay_snr) + log2_1p(snrs.nu2));

  const RootPair roots = characteristic_roots(snrs.nu1, snrs.nu2, q_of_tau(frame.tau));
  const double product =
      powers.p1 * powers.p2 * channels.h2_sq * channels.h2_sq / (1.0 + snrs.nu1);
  return finite_frame_rate(frame, roots, product);
}

RateReport noma_rates(const LinkChannels& channels, const PowerAllocation& powers) {
  channels.validate();
  powers.validate();
  const StrongUserSnrs mu = strong_user_snrs(channels, powers);
  const double nu1 = powers.p1 * channels.h2_sq;
  return {0.5 * log2_1p(mu.mu1), 0.5 * log2_1p(mu.mu2 / (1.0 + mu.mu1)),
          0.5 * log2_1p(powers.pr * channels.h12_sq + powers.p2 * channels.h2_sq / (nu1 + 1.0))};
}

RateReport anoma_rates(const FrameConfig& frame, const LinkChannels& channels,
                       const PowerAllocation& powers) {
  const StrongUserSnrs mu = derive_snrs(channels, powers).strong;
  return {rate_strong_own(frame, mu.mu1), rate_strong_cross(frame, mu),
          rate_weak(frame, channels, powers)};
}

double strong_cross_asymptote(const StrongUserSnrs& snrs, double q) {
  require_snr(snrs.mu1, "mu1");
  require_snr(snrs.mu2, "mu2");
  require_q(q);
  const double x = (1.0 + snrs.mu1 + snrs.mu2) / (1.0 + snrs.mu1);
  const double y = snrs.mu1 * snrs.mu2 * q / (1.0 + snrs.mu1);
  return asymptote_from(x, y);
}

double weak_asymptote(const LinkChannels& channels, const PowerAllocation& powers, double q) {
  channels.validate();
  powers.validate();
  require_q(q);
  const double nu1 = powers.p1 * channels.h2_sq;
  const double x = 1.0 + powers.pr * channels.h12_sq + powers.p2 * channels.h2_sq / (1.0 + nu1);
  const double y = powers.p1 * powers.p2 * channels.h2_sq * channels.h2_sq * q / (1.0 + nu1);
  return asymptote_from(x, y);
}

BoundChain strong_cross_bounds(const StrongUserSnrs& snrs, double tau) {
  if (!(snrs.mu1 > 0.0) || !std::isfinite(snrs.mu1)) throw ValidationError("mu1", "must be > 0");
  if (!(snrs.mu2 > 0.0) || !std::isfinite(snrs.mu2)) throw ValidationError("mu2", "must be > 0");
  const double q = q_of_tau(tau);
  const double x = (1.0 + snrs.mu1 + snrs.mu2) / (1.0 + snrs.mu1);
  const double y = snrs.mu1 * snrs.mu2 * q / (1.0 + snrs.mu1);
  return chain_from(x, y);
}

BoundChain weak_bounds(const LinkChannels& channels, const PowerAllocation& powers, double tau) {
  channels.validate();
  powers.validate();
  const WeakUserSnrs nu = weak_user_snrs(channels, powers);
  if (!(nu.nu1 > 0.0)) throw ValidationError("nu1", "must be > 0");
  if (!(nu.nu2 > 0.0)) throw ValidationError("nu2", "must be > 0");
  const double q = q_of_tau(tau);
  const double x = 1.0 + powers.pr * channels.h12_sq + powers.p2 * channels.h2_sq / (1.0 + nu.nu1);
  const double y = powers.p1 * powers.p2 * channels.h2_sq * channels.h2_sq * q / (1.0 + nu.nu1);
  return chain_from(x, y);
}

double optimal_tau(int frame_n, TauObjective objective, const LinkChannels& channels,
                   const PowerAllocation& powers, double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 0.1)) {
    throw ValidationError("grid_step", "must lie in (0, 0.1]");
  }
  if (frame_n < 1) throw ValidationError("frame.n", "must be >= 1");
  channels.validate();
  powers.validate();
  const StrongUserSnrs mu = strong_user_snrs(channels, powers);

  const auto steps = static_cast<long>(std::floor((1.0 - grid_step) / grid_step + 1e-9));
  double best_tau = 0.0;
  double best_rate = -INFINITY;
  for (long i = 0; i <= steps; ++i) {
    const FrameConfig frame{frame_n, static_cast<double>(i) * grid_step};
    const double rate = objective == TauObjective::kStrongCross
                            ? rate_strong_cross(frame, mu)
                            : rate_weak(frame, channels, powers);
    if (rate > best_rate) {
      best_rate = rate;
      best_tau = frame.tau;
    }
  }
  return best_tau;
}

}  // namespace canoma
