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

#ifndef CANOMA_ERRORS_HPP_
#define CANOMA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace canoma {

// Invalid input value. `field()` names the offending field using a dotted
// path ("qos.gamma1", "frame.tau", ...).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Timing mismatch too close to 0 or 1 for the sampled-matrix model: the two
// sample streams coincide and the Gram matrix becomes singular.
class ConditioningError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A triangular factorization broke down (matrix not positive definite).
class NotPositiveDefiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A zero channel gain appears in a denominator of the power thresholds.
class DegenerateChannelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace canoma

#endif  // CANOMA_ERRORS_HPP_
