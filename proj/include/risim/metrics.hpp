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
#include <vector>

#include "risim/channel.hpp"

namespace risim {

/// Transmit power, noise power, and the dB ratio between them. The noise
/// power defaults to 1 W so that P = 10^(snr/10).
struct LinkBudget {
    double transmit_power = 1.0; // watts
    double noise_power = 1.0;    // watts
    double snr_db = 0.0;

    static LinkBudget from_snr_db(double snr_db, double noise_power = 1.0);
    static LinkBudget from_power(double transmit_power, double noise_power = 1.0);

    double snr_linear() const { return transmit_power / noise_power; }
};

/// Constants and phase terms of the averaged-SE upper bound
///   S_u = log2(1 + (P/s^2) (C1 |sum_k e^{jR1_k} sum_i e^{-jR2_{k,i}}|^2 + C2)).
struct SeBoundTerms {
    double c1 = 0.0;
    double c2 = 0.0;
    std::vector<double> r1;      // length n_blocks
    std::vector<double> r2;      // n_blocks x block_size, row-major
    double coherent_gain = 0.0;  // |sum_k e^{jR1_k} sum_i e^{-jR2_{k,i}}|^2
};

SeBoundTerms se_bound_terms(const SystemGeometry& geometry, const RisConfiguration& config);

/// Maximum-ratio transmit precoder h/||h||. Throws on a zero channel.
cvec mrt_precoder(const cvec& h);

/// Instantaneous spectral efficiency log2(1 + (P/s^2) ||g^T diag(v) G||^2).
double se_instantaneous(const ComplexMatrix& bs_ris, const cvec& ris_ue, const cvec& reflection,
                        const LinkBudget& budget);

/// Averaged-SE upper bound for a block-controlled surface.
double se_upper_bound_bc(const SystemGeometry& geometry, const RisConfiguration& config,
                         const LinkBudget& budget);

/// Averaged-SE upper bound for an element-controlled surface (one element per
/// block); evaluates the block-controlled bound on the reinterpreted geometry.
double se_upper_bound_ec(const SystemGeometry& geometry, std::span<const double> phases,
                         const LinkBudget& budget);

/// Averaged-SE loss of the block-controlled surface relative to the
/// element-controlled one, both with their optimal reflection phases, as the
/// difference of the two bound evaluations. Nonnegative for any rotations.
double se_gap(const SystemGeometry& geometry, std::span<const double> rotations,
              const LinkBudget& budget);

/// Same quantity in the equivalent single-logarithm form for a rotation angle
/// shared by all blocks. Kept as an independent route; the two agree to
/// floating-point accuracy.
double se_gap_single_log(const SystemGeometry& geometry, double theta, const LinkBudget& budget);

/// se / total power.
double energy_efficiency(double se, double total_power);

}  // namespace risim
