// SPDX-License-Identifier: Apache-2.0
//
// risim - spectral/energy efficiency simulation and design toolkit for
// block-controlled reconfigurable intelligent surfaces
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "risim/channel.hpp"
#include "risim/power.hpp"
#include "risim/simkit.hpp"

namespace risim {

/// Configuration/validation failure with a line- or field-precise message.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SweepSpec {
    SweepAxis axis = SweepAxis::snr_db;
    std::vector<double> grid;
    int n_trials = 10000;
    std::uint64_t seed = 1;
    double fixed_snr_db = 10.0; // used when the axis is not snr_db
};

/// Fully resolved experiment description.
struct ExperimentConfig {
    SystemGeometry geometry;
    PowerParams power;
    double noise_power = 1.0;
    SweepSpec sweep;
    std::string output_path = "risim_out.csv";
};

/// Parse the sectioned key-value format documented in the README. Defaults
/// are applied for absent optional keys; unknown or duplicate keys and
/// malformed values are rejected with the offending line in the message.
ExperimentConfig parse_config(std::string_view text);

/// Canonical text form; parse(serialize(c)) reproduces c exactly.
std::string serialize_config(const ExperimentConfig& config);

const char* to_string(SweepAxis axis);

/// Grid description for the rotation-power feasibility map.
struct FeasibilityMapConfig {
    double p1 = 0.12;
    int n_ris_elements = 32;
    double p2_min = 0.0;
    double p2_max = 0.6;
    int p2_points = 50;
    double p_unit_min = 0.0;
    double p_unit_max = 0.9;
    int p_unit_points = 50;
    std::string output_path = "risim_feasibility.csv";
};

FeasibilityMapConfig parse_feasibility_config(std::string_view text);

/// Canonical text form of a feasibility grid description.
std::string serialize_feasibility_config(const FeasibilityMapConfig& config);

}  // namespace risim
