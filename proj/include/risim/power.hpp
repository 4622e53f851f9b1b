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

#include <span>

#include "risim/channel.hpp"

namespace risim {

/// Scalar power coefficients of the consumption model.
struct PowerParams {
    double static_power = 12.0;        // P0: BS + UE + surface constant circuits
    double phase_circuit_power = 0.12; // P1: one reflection-phase control circuit
    double rotate_circuit_power = 0.0; // P2: one rotation control circuit
    double unit_rotation_power = 0.0;  // P_unit: per element-distance per radian
    double amplifier_slope = 1.2;      // xi: amplifier power per transmit watt

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Element-controlled surface: P0 + xi*P + N_s*P1.
double power_ec(const PowerParams& params, int n_elements, double transmit_power);

/// Block-controlled surface with per-block rotations:
///   P0 + xi*P + K*(P1+P2) + sum_k ((M^2-1)/4) |theta_k| P_unit.
/// The closed-form per-block factor (M^2-1)/4 equals the discrete sum
/// 2*sum_{m=0}^{(M-1)/2} m for odd block sizes and is used for all sizes.
double power_bc(const PowerParams& params, const SystemGeometry& geometry,
                std::span<const double> rotations, double transmit_power);

/// Block-controlled surface with one rotation angle shared by all blocks.
double power_bc_uniform(const PowerParams& params, const SystemGeometry& geometry, double theta,
                        double transmit_power);

}  // namespace risim
