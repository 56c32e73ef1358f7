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

// JSON scenario files.
//
//   {
//     "channels": {"h1_sq": 1, "h2_sq": 0.5, "h12_sq": 2},
//     "powers":   {"p1": 1.5, "p2": 3.5, "pr": 2},
//     "frame":    {"n": 100, "tau": 0.5},
//     "qos":      {"r1_star": 0.5, "gamma2": 1},
//     "weights":  {"omega_s": 0.2, "omega_r": 0.8},
//     "limits":   {"ps_max": 20, "pr_max": 5},
//     "n_star":   100
//   }
//
// Only "channels" is required. Missing values default to powers 0, n 100,
// tau 0.5, targets 0, weights (0.2, 0.8), limits (20, 5), n_star 100. When
// only one weight is given the other is its complement. Each target is given
// either as a rate or as an SINR, not both.

#ifndef CANOMA_EXPERIMENT_SCENARIO_FILE_HPP_
#define CANOMA_EXPERIMENT_SCENARIO_FILE_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "canoma/model.hpp"

namespace canoma::experiment {

struct ScenarioBundle {
  PowerScenario scenario;  // scenario.tau mirrors frame.tau
  PowerAllocation powers;
  FrameConfig frame{100, 0.5};
};

// Malformed JSON or an unreadable file. Semantic problems raise
// ValidationError with the offending field path instead.
class ScenarioParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ScenarioBundle parse_scenario(std::string_view text);
ScenarioBundle load_scenario(const std::filesystem::path& path);

// Writes every field explicitly, targets as rates.
std::string scenario_to_json(const ScenarioBundle& bundle);

}  // namespace canoma::experiment

#endif  // CANOMA_EXPERIMENT_SCENARIO_FILE_HPP_
