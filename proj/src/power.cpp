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

#include "risim/power.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace risim {

void PowerParams::validate() const {
    const auto check = [](double v, const char* name, double min) {
        if (!std::isfinite(v) || v < min)
            throw std::invalid_argument(std::string(name) + ": must be finite and >= " +
                                        (min == 1.0 ? "1" : "0"));
    };
    check(static_power, "static_power", 0.0);
    check(phase_circuit_power, "phase_circuit_power", 0.0);
    check(rotate_circuit_power, "rotate_circuit_power", 0.0);
    check(unit_rotation_power, "unit_rotation_power", 0.0);
    check(amplifier_slope, "amplifier_slope", 1.0);
}

double power_ec(const PowerParams& params, int n_elements, double transmit_power) {
    params.validate();
    if (n_elements < 1) throw std::invalid_argument("n_elements: must be >= 1");
    return params.static_power + params.amplifier_slope * transmit_power +
           n_elements * params.phase_circuit_power;
}

double power_bc(const PowerParams& params, const SystemGeometry& geometry,
                std::span<const double> rotations, double transmit_power) {
    params.validate();
    geometry.validate();
    if (static_cast<int>(rotations.size()) != geometry.n_blocks)
        throw std::invalid_argument("rotations: expected length " +
                                    std::to_string(geometry.n_blocks) + ", got " +
                                    std::to_string(rotations.size()));

    const double m = geometry.block_size;
    const double per_block_factor = (m * m - 1.0) / 4.0;
    double rotation = 0.0;
    for (const double theta : rotations)
        rotation += per_block_factor * std::fabs(theta) * params.unit_rotation_power;

    return params.static_power + params.amplifier_slope * transmit_power +
           geometry.n_blocks * (params.phase_circuit_power + params.rotate_circuit_power) +
           rotation;
}

double power_bc_uniform(const PowerParams& params, const SystemGeometry& geometry, double theta,
                        double transmit_power) {
    params.validate();
    geometry.validate();
    const double m = geometry.block_size;
    return params.static_power + params.amplifier_slope * transmit_power +
           geometry.n_blocks * (params.phase_circuit_power + params.rotate_circuit_power) +
           geometry.n_blocks * ((m * m - 1.0) / 4.0) * std::fabs(theta) *
               params.unit_rotation_power;
}

}  // namespace risim
