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

#include <iosfwd>
#include <string>
#include <vector>

#include "risim/config.hpp"

namespace risim {

/// CSV number format shared by every emitter: 12 significant digits,
/// scientific notation below 1e-4 in magnitude, locale-independent.
std::string format_csv_number(double v);

/// Run the configured sweep and write one CSV row per axis point with columns
///   axis, mean_se_bc, se_stderr, bound_bc, bound_ec, p_ec_watts, p_bc_watts,
///   k_star, ee_bc, ee_ec.
/// The resolved configuration is echoed to `log` so a run can be reproduced
/// from its log alone. Throws on unwritable output or invalid configuration.
void run_experiment(const ExperimentConfig& config, std::ostream& log);

/// Render the sweep result to CSV text (exactly what run_experiment writes).
std::string sweep_to_csv(const SweepResult& result);

/// Scan the (P2, P_unit) grid and write rows
///   p2, p_unit, regime, feasible, margin_watts.
/// Regime values on a range edge carry a trailing '*'.
void emit_feasibility_map(const FeasibilityMapConfig& config, std::ostream& log);

/// Sample one channel realization under the configured geometry with the
/// optimal block design and write it as a JSON document (matrices as
/// [re, im] pair arrays) for debugging.
void dump_channel_realization(const ExperimentConfig& config, std::uint64_t trial,
                              const std::string& output_path);

/// Bundled experiment presets. Unknown names throw ConfigError.
std::string preset_config_text(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace risim
