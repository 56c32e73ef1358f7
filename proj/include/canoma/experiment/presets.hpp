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

// Canned parameter sweeps, one per figure of the reference study.
//
//   fig4   |h1|^2 sweep, strong-user rates, matrix and closed form
//   fig5   |h12|^2 sweep, weak-user rate, matrix and closed form
//   fig6   N sweep, finite-frame rates against asymptote and bounds
//   fig7   N sweep, grid-searched optimal tau
//   fig8   (gamma1, gamma2) grid, minimized weighted sum power
//   fig9   same grid, NOMA minus ANOMA and the feasibility region
//   fig10  omega_s sweep, optimal powers and weighted components
//
// An override scenario replaces every fixed parameter of the preset; the
// swept axis is always generated by the preset.

#ifndef CANOMA_EXPERIMENT_PRESETS_HPP_
#define CANOMA_EXPERIMENT_PRESETS_HPP_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "canoma/experiment/result_table.hpp"
#include "canoma/experiment/scenario_file.hpp"

namespace canoma::experiment {

enum class PresetId { kFig4, kFig5, kFig6, kFig7, kFig8, kFig9, kFig10 };

// Throws std::invalid_argument for an unknown id.
PresetId parse_preset_id(std::string_view name);
std::string_view to_string(PresetId id);

inline constexpr std::array<int, 10> kPresetFrameLengths = {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000};
inline constexpr int kGainSweepPoints = 50;
inline constexpr double kGainSweepMin = 0.1;
inline constexpr double kGainSweepMax = 10.0;
inline constexpr int kGammaGridPoints = 40;
inline constexpr double kGammaGridMin = 0.1;
inline constexpr double kGammaGridMax = 30.0;
inline constexpr double kWeightSweepStep = 0.02;

// `points` values, endpoints included.
std::vector<double> log_grid(double lo, double hi, int points);
std::vector<double> linear_grid(double lo, double hi, int points);

// Fixed parameters of the power-minimization presets (fig8 to fig10).
ScenarioBundle power_preset_base();

ResultTable run_preset(PresetId id, const std::optional<ScenarioBundle>& overrides = std::nullopt);

}  // namespace canoma::experiment

#endif  // CANOMA_EXPERIMENT_PRESETS_HPP_
