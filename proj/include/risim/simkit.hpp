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
#include <span>
#include <vector>

#include "risim/channel.hpp"
#include "risim/metrics.hpp"
#include "risim/power.hpp"

namespace risim {

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo estimate of the averaged spectral efficiency over independent
/// Rician draws. Trial i consumes the random stream (seed, i), so results are
/// identical no matter how trials are scheduled; the per-trial values are
/// reduced in trial order. Parallelized over trials with OpenMP.
MonteCarloEstimate estimate_average_se(const SystemGeometry& geometry,
                                       const RisConfiguration& config, const LinkBudget& budget,
                                       int n_trials, std::uint64_t seed);

/// Plain sequential implementation of the same estimate, kept as the
/// reference the parallel kernel is tested against. Bit-identical output.
MonteCarloEstimate estimate_average_se_serial(const SystemGeometry& geometry,
                                              const RisConfiguration& config,
                                              const LinkBudget& budget, int n_trials,
                                              std::uint64_t seed);

/// One row per axis point of a parameter sweep, both control schemes
/// designed optimally from the line-of-sight statistics.
struct SweepResult {
    std::vector<double> axis_values;
    std::vector<double> mean_se;      // block-controlled Monte Carlo mean
    std::vector<double> se_std_error;
    std::vector<double> bound_se;     // block-controlled analytical bound
    std::vector<double> bound_se_ec;  // element-controlled analytical bound
    std::vector<double> mean_ee_bc;
    std::vector<double> mean_ee_ec;
    std::vector<double> p_ec_watts;
    std::vector<double> p_bc_watts;
    std::vector<int> k_star;          // chosen block count
    int n_trials = 0;
    std::uint64_t seed = 0;
};

enum class SweepAxis { snr_db, kappa, n_ris_elements };

/// Sweep over transmit SNR. Every point: optimal rotation, optimal block
/// segmentation, optimal phases for both schemes, Monte Carlo means, bounds,
/// power and energy efficiency.
SweepResult run_snr_sweep(const SystemGeometry& geometry, const PowerParams& power,
                          std::span<const double> snr_db_grid, int n_trials, std::uint64_t seed,
                          double noise_power = 1.0);

/// Generalized sweep used by the experiment runner. For the kappa axis both
/// Rician factors follow the grid at a fixed SNR; for the element-count axis
/// the nominal block size is kept and the block count rescales.
SweepResult run_axis_sweep(SweepAxis axis, const SystemGeometry& geometry,
                           const PowerParams& power, std::span<const double> grid, int n_trials,
                           std::uint64_t seed, double noise_power, double fixed_snr_db);

struct TightnessRow {
    int n_ris_elements = 0;
    double kappa = 0.0;
    double mean_se = 0.0;
    double std_error = 0.0;
    double bound = 0.0;
    double gap = 0.0; // bound - mean_se
};

/// Bound-versus-simulation gap across Rician factors (applied to both hops)
/// for each geometry in the family, optimal designs throughout.
std::vector<TightnessRow> bound_tightness_study(std::span<const SystemGeometry> geometry_family,
                                                std::span<const double> kappa_grid, int n_trials,
                                                std::uint64_t seed, const LinkBudget& budget);

}  // namespace risim
