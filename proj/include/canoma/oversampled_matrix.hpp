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

// Exact finite-frame throughputs from the sampled ("virtual MIMO") model.
//
// With a timing offset tau*T between the two superposed streams, a receiver
// that matched-filters at iT and (i+tau)T sees 2N correlated samples per
// frame. Their Gram matrix R is tridiagonal with unit diagonal and
// off-diagonals alternating 1-tau, tau, 1-tau, ...; it is also the noise
// covariance. Every rate here is a difference of two SPD log-determinants,
// normalized by the 2N + tau channel uses of the half-duplex frame.
//
// This path is the reference the closed forms are tested against. It is only
// defined away from tau = 0 where R is singular.

#ifndef CANOMA_OVERSAMPLED_MATRIX_HPP_
#define CANOMA_OVERSAMPLED_MATRIX_HPP_

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "canoma/model.hpp"

namespace canoma {

inline constexpr double kMinMatrixTau = 1e-3;
inline constexpr int kMaxMatrixFrame = 4096;

// True when (frame.n, frame.tau) is inside the window the matrix path accepts.
bool matrix_path_supports(const FrameConfig& frame);

struct BandEntry {
  int row;
  double value;
};

// Symmetric matrix with nonzeros only within `bandwidth` of the diagonal.
// Lower band stored column-major: entry (i, j), i >= j, at j*(bw+1) + (i-j).
class SymmetricBandMatrix {
 public:
  SymmetricBandMatrix(int size, int bandwidth);

  int size() const { return size_; }
  int bandwidth() const { return bandwidth_; }

  // Zero outside the band.
  double operator()(int i, int j) const;
  // Adds `value` to entries (i, j) and (j, i). |i - j| must not exceed the
  // bandwidth.
  void add(int i, int j, double value);
  // this += scale * v * v^T for a sparse column v.
  void add_outer(std::span<const BandEntry> column, double scale);

  Eigen::MatrixXd dense() const;

 private:
  friend double logdet_spd(const SymmetricBandMatrix& matrix);

  int size_;
  int bandwidth_;
  std::vector<double> lower_;
};

// R for the given frame.
class GramMatrix {
 public:
  const FrameConfig& frame() const { return frame_; }
  int dimension() const { return 2 * frame_.n; }

  // Entry (k, k+1); alternates 1 - tau (k even) and tau (k odd).
  double off_diagonal(int k) const { return (k % 2 == 0) ? 1.0 - frame_.tau : frame_.tau; }
  double entry(int i, int j) const;

  // Nonzeros of column c (at most three).
  std::vector<BandEntry> column(int c) const;

  // Band storage of R, with room for `bandwidth` off-diagonals.
  SymmetricBandMatrix band(int bandwidth = 1) const;
  Eigen::MatrixXd dense() const;

 private:
  friend GramMatrix build_r_matrix(const FrameConfig& frame);
  explicit GramMatrix(FrameConfig frame) : frame_(frame) {}

  FrameConfig frame_;
};

// Throws ConditioningError when tau is outside [kMinMatrixTau, 1 - kMinMatrixTau]
// and ValidationError when n exceeds kMaxMatrixFrame.
GramMatrix build_r_matrix(const FrameConfig& frame);

// Base-2 log-determinant via Cholesky. Throws NotPositiveDefiniteError.
double logdet_spd(const Eigen::MatrixXd& matrix);
double logdet_spd(const SymmetricBandMatrix& matrix);

// log2 det(I + mu1 * G1 G1^T R), computed as logdet(R + mu1 R G1 G1^T R) - logdet(R).
double own_signal_logdet_gain(const FrameConfig& frame, double mu1);

double rate_strong_own_matrix(const FrameConfig& frame, const StrongUserSnrs& snrs);
double rate_strong_cross_matrix(const FrameConfig& frame, const StrongUserSnrs& snrs);
// Weak user combining the broadcast samples with the relay-phase block.
double rate_weak_matrix(const FrameConfig& frame, const LinkChannels& channels,
                        const PowerAllocation& powers);

}  // namespace canoma

#endif  // CANOMA_OVERSAMPLED_MATRIX_HPP_
