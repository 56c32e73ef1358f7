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

#include "canoma/oversampled_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace canoma {
namespace {

void check_matrix_frame(const FrameConfig& frame) {
  frame.validate();
  if (frame.n > kMaxMatrixFrame) {
    throw ValidationError("frame.n", "matrix path supports n <= " + std::to_string(kMaxMatrixFrame));
  }
  if (frame.tau < kMinMatrixTau || frame.tau > 1.0 - kMinMatrixTau) {
    throw ConditioningError("tau = " + std::to_string(frame.tau) +
                            " is outside the conditioning window of the sampled model");
  }
}

double channel_uses(const FrameConfig& frame) { return 2.0 * frame.n + frame.tau; }

// R + sum_k scale * (R e_{2k+parity})(R e_{2k+parity})^T, strong-user layout.
void add_stream(SymmetricBandMatrix& m, const GramMatrix& r, int parity, double scale) {
  for (int k = 0; k < r.frame().n; ++k) {
    const auto col = r.column(2 * k + parity);
    m.add_outer(col, scale);
  }
}

// Weak-user layout interleaves the relay sample of symbol k after the two
// broadcast samples of symbol k: broadcast sample s -> 3*(s/2) + s%2,
// relay sample k -> 3k + 2. The permutation leaves determinants unchanged and
// keeps the stacked covariance banded.
int weak_row(int sample) { return 3 * (sample / 2) + sample % 2; }

std::vector<BandEntry> to_weak_layout(std::vector<BandEntry> col) {
  for (auto& e : col) e.row = weak_row(e.row);
  return col;
}

}  // namespace

bool matrix_path_supports(const FrameConfig& frame) {
  return frame.n >= 1 && frame.n <= kMaxMatrixFrame && frame.tau >= kMinMatrixTau &&
         frame.tau <= 1.0 - kMinMatrixTau;
}

SymmetricBandMatrix::SymmetricBandMatrix(int size, int bandwidth)
    : size_(size), bandwidth_(bandwidth),
      lower_(static_cast<std::size_t>(size) * static_cast<std::size_t>(bandwidth + 1), 0.0) {
  if (size < 1 || bandwidth < 0) throw std::invalid_argument("SymmetricBandMatrix: bad shape");
}

double SymmetricBandMatrix::operator()(int i, int j) const {
  if (i < j) std::swap(i, j);
  if (i - j > bandwidth_) return 0.0;
  return lower_[static_cast<std::size_t>(j) * (bandwidth_ + 1) + (i - j)];
}

void SymmetricBandMatrix::add(int i, int j, double value) {
  if (i < j) std::swap(i, j);
  if (i - j > bandwidth_ || j < 0 || i >= size_) {
    throw std::out_of_range("SymmetricBandMatrix::add: entry outside band");
  }
  lower_[static_cast<std::size_t>(j) * (bandwidth_ + 1) + (i - j)] += value;
}

void SymmetricBandMatrix::add_outer(std::span<const BandEntry> column, double scale) {
  for (std::size_t a = 0; a < column.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      double v = scale * column[a].value * column[b].value;
      if (a != b && column[a].row == column[b].row) v *= 2.0;
      add(column[a].row, column[b].row, v);
    }
  }
}

Eigen::MatrixXd SymmetricBandMatrix::dense() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(size_, size_);
  for (int j = 0; j < size_; ++j) {
    for (int i = j; i <= std::min(size_ - 1, j + bandwidth_); ++i) {
      out(i, j) = out(j, i) = (*this)(i, j);
    }
  }
  return out;
}

double GramMatrix::entry(int i, int j) const {
  if (i == j) return 1.0;
  if (std::abs(i - j) != 1) return 0.0;
  return off_diagonal(std::min(i, j));
}

std::vector<BandEntry> GramMatrix::column(int c) const {
  std::vector<BandEntry> col;
  col.reserve(3);
  if (c > 0) col.push_back({c - 1, off_diagonal(c - 1)});
  col.push_back({c, 1.0});
  if (c + 1 < dimension()) col.push_back({c + 1, off_diagonal(c)});
  return col;
}

SymmetricBandMatrix GramMatrix::band(int bandwidth) const {
  SymmetricBandMatrix m(dimension(), std::max(1, bandwidth));
  for (int k = 0; k < dimension(); ++k) {
    m.add(k, k, 1.0);
    if (k + 1 < dimension()) m.add(k + 1, k, off_diagonal(k));
  }
  return m;
}

Eigen::MatrixXd GramMatrix::dense() const { return band().dense(); }

GramMatrix build_r_matrix(const FrameConfig& frame) {
  check_matrix_frame(frame);
  return GramMatrix(frame);
}

double logdet_spd(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw std::invalid_argument("logdet_spd: matrix must be square and non-empty");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(matrix);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefiniteError("logdet_spd: Cholesky factorization failed");
  }
  const auto diag = llt.matrixLLT().diagonal();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) sum += std::log(diag(i));
  return 2.0 * sum / std::numbers::ln2;
}

double logdet_spd(const SymmetricBandMatrix& matrix) {
  const int n = matrix.size_;
  const int bw = matrix.bandwidth_;
  std::vector<double> l = matrix.lower_;
  const auto at = [&](int i, int j) -> double& {
    return l[static_cast<std::size_t>(j) * (bw + 1) + (i - j)];
  };

  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    double d = at(j, j);
    for (int k = std::max(0, j - bw); k < j; ++k) d -= at(j, k) * at(j, k);
    if (!(d > 0.0)) {
      throw NotPositiveDefiniteError("logdet_spd: non-positive pivot at row " + std::to_string(j));
    }
    const double pivot = std::sqrt(d);
    at(j, j) = pivot;
    sum += std::log(pivot);
    for (int i = j + 1; i <= std::min(n - 1, j + bw); ++i) {
      double v = at(i, j);
      for (int k = std::max(0, i - bw); k < j; ++k) v -= at(i, k) * at(j, k);
      at(i, j) = v / pivot;
    }
  }
  return 2.0 * sum / std::numbers::ln2;
}

double own_signal_logdet_gain(const FrameConfig& frame, double mu1) {
  const GramMatrix r = build_r_matrix(frame);
  SymmetricBandMatrix base = r.band();
  SymmetricBandMatrix with_own = r.band(2);
  add_stream(with_own, r, 0, mu1);
  return logdet_spd(with_own) - logdet_spd(base);
}

double rate_strong_own_matrix(const FrameConfig& frame, const StrongUserSnrs& snrs) {
  if (!(snrs.mu1 >= 0.0)) throw ValidationError("snrs.mu1", "must be >= 0");
  return own_signal_logdet_gain(frame, snrs.mu1) / channel_uses(frame);
}

double rate_strong_cross_matrix(const FrameConfig& frame, const StrongUserSnrs& snrs) {
  if (!(snrs.mu1 >= 0.0)) throw ValidationError("snrs.mu1", "must be >= 0");
  if (!(snrs.mu2 >= 0.0)) throw ValidationError("snrs.mu2", "must be >= 0");
  const GramMatrix r = build_r_matrix(frame);

  SymmetricBandMatrix interference = r.band(2);
  add_stream(interference, r, 0, snrs.mu1);
  SymmetricBandMatrix total = interference;
  add_stream(total, r, 1, snrs.mu2);

  return (logdet_spd(total) - logdet_spd(interference)) / channel_uses(frame);
}

double rate_weak_matrix(const FrameConfig& frame, const LinkChannels& channels,
                        const PowerAllocation& powers) {
  channels.validate();
  powers.validate();
  const GramMatrix r = build_r_matrix(frame);
  const int n = frame.n;

  // Noise covariance blockdiag(R, I) in the interleaved layout.
  SymmetricBandMatrix interference(3 * n, 3);
  for (int s = 0; s < 2 * n; ++s) {
    interference.add(weak_row(s), weak_row(s), 1.0);
    if (s + 1 < 2 * n) interference.add(weak_row(s + 1), weak_row(s), r.off_diagonal(s));
  }
  for (int k = 0; k < n; ++k) interference.add(3 * k + 2, 3 * k + 2, 1.0);

  // W1: User 1's stream, broadcast samples only.
  const double w1_scale = powers.p1 * channels.h2_sq;
  for (int k = 0; k < n; ++k) {
    interference.add_outer(to_weak_layout(r.column(2 * k)), w1_scale);
  }

  // W2: User 2's stream over both the broadcast and relay phases.
  SymmetricBandMatrix total = interference;
  const double broadcast_amp = std::sqrt(powers.p2 * channels.h2_sq);
  const double relay_amp = std::sqrt(powers.pr * channels.h12_sq);
  for (int k = 0; k < n; ++k) {
    auto col = to_weak_layout(r.column(2 * k + 1));
    for (auto& e : col) e.value *= broadcast_amp;
    col.push_back({3 * k + 2, relay_amp});
    total.add_outer(col, 1.0);
  }

  return (logdet_spd(total) - logdet_spd(interference)) / channel_uses(frame);
}

}  // namespace canoma
