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

#include "risim/simkit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "risim/design.hpp"
#include "risim/omp_compat.hpp"

namespace risim {

namespace {

struct TrialWorkspace {
    ComplexMatrix bs_ris;
    cvec ris_ue;
    cvec row;
};

double run_one_trial(const ChannelModel& model, const cvec& reflection, double snr_linear,
                     std::uint64_t seed, int trial, TrialWorkspace& ws) {
    rng::Xoshiro256pp gen = rng::Xoshiro256pp::for_stream(seed, static_cast<std::uint64_t>(trial));
    model.sample_into(gen, ws.bs_ris, ws.ris_ue);
    return std::log2(1.0 + snr_linear * cascaded_gain(ws.bs_ris, ws.ris_ue, reflection, ws.row));
}

/// Deterministic reduction in trial order. A constant sample (the pure
/// line-of-sight mode) reduces to exactly (value, 0).
MonteCarloEstimate reduce(const std::vector<double>& values) {
    const std::size_t n = values.size();
    bool constant = true;
    for (const double v : values) constant = constant && v == values.front();
    if (constant) return {values.front(), 0.0};

    double sum = 0.0;
    for (const double v : values) sum += v;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const double v : values) ss += (v - mean) * (v - mean);
    const double sample_var = ss / static_cast<double>(n - 1);
    return {mean, std::sqrt(sample_var / static_cast<double>(n))};
}

MonteCarloEstimate estimate_impl(const SystemGeometry& geometry, const RisConfiguration& config,
                                 const LinkBudget& budget, int n_trials, std::uint64_t seed,
                                 bool parallel) {
    if (n_trials < 2) throw std::invalid_argument("n_trials: must be >= 2");
    const ChannelModel model = make_channel_model(geometry, config.rotation_angles);
    const cvec reflection = build_reflection_vector(config, geometry);
    const double snr = budget.snr_linear();

    std::vector<double> se(n_trials);
    if (parallel) {
#pragma omp parallel
        {
            TrialWorkspace ws;
#pragma omp for schedule(static)
            for (int i = 0; i < n_trials; ++i)
                se[i] = run_one_trial(model, reflection, snr, seed, i, ws);
        }
    } else {
        TrialWorkspace ws;
        for (int i = 0; i < n_trials; ++i)
            se[i] = run_one_trial(model, reflection, snr, seed, i, ws);
    }
    return reduce(se);
}

}  // namespace

MonteCarloEstimate estimate_average_se(const SystemGeometry& geometry,
                                       const RisConfiguration& config, const LinkBudget& budget,
                                       int n_trials, std::uint64_t seed) {
    return estimate_impl(geometry, config, budget, n_trials, seed, true);
}

MonteCarloEstimate estimate_average_se_serial(const SystemGeometry& geometry,
                                              const RisConfiguration& config,
                                              const LinkBudget& budget, int n_trials,
                                              std::uint64_t seed) {
    return estimate_impl(geometry, config, budget, n_trials, seed, false);
}

namespace {

/// Optimally designed block- and element-controlled schemes for one geometry,
/// evaluated at one link budget.
void evaluate_point(const SystemGeometry& geometry, const PowerParams& power,
                    const LinkBudget& budget, int n_trials, std::uint64_t seed, double axis_value,
                    SweepResult& out) {
    const double theta = optimal_rotation(geometry.aoa_ris, geometry.aod_ris);
    const SegmentationResult seg =
        optimal_block_count(power, geometry.n_ris_elements, theta);

    SystemGeometry bc = geometry;
    bc.n_blocks = seg.chosen_k;
    bc.block_size = seg.chosen_m;
    RisConfiguration bc_config;
    bc_config.rotation_angles.assign(bc.n_blocks, theta);
    bc_config.reflection_phases = optimal_phases(bc);

    const SystemGeometry ec = geometry.element_controlled();
    RisConfiguration ec_config = RisConfiguration::zeros(ec.n_blocks);
    ec_config.reflection_phases = optimal_phases(ec);

    const MonteCarloEstimate mc_bc = estimate_average_se(bc, bc_config, budget, n_trials, seed);
    const MonteCarloEstimate mc_ec = estimate_average_se(ec, ec_config, budget, n_trials, seed);

    const double p_ec = power_ec(power, ec.n_ris_elements, budget.transmit_power);
    const double p_bc = power_bc_uniform(power, bc, theta, budget.transmit_power);

    out.axis_values.push_back(axis_value);
    out.mean_se.push_back(mc_bc.mean);
    out.se_std_error.push_back(mc_bc.std_error);
    out.bound_se.push_back(se_upper_bound_bc(bc, bc_config, budget));
    out.bound_se_ec.push_back(se_upper_bound_ec(ec, ec_config.reflection_phases, budget));
    out.mean_ee_bc.push_back(energy_efficiency(mc_bc.mean, p_bc));
    out.mean_ee_ec.push_back(energy_efficiency(mc_ec.mean, p_ec));
    out.p_ec_watts.push_back(p_ec);
    out.p_bc_watts.push_back(p_bc);
    out.k_star.push_back(seg.chosen_k);
}

}  // namespace

SweepResult run_snr_sweep(const SystemGeometry& geometry, const PowerParams& power,
                          std::span<const double> snr_db_grid, int n_trials, std::uint64_t seed,
                          double noise_power) {
    return run_axis_sweep(SweepAxis::snr_db, geometry, power, snr_db_grid, n_trials, seed,
                          noise_power, 0.0);
}

SweepResult run_axis_sweep(SweepAxis axis, const SystemGeometry& geometry,
                           const PowerParams& power, std::span<const double> grid, int n_trials,
                           std::uint64_t seed, double noise_power, double fixed_snr_db) {
    if (grid.empty()) throw std::invalid_argument("grid: must be nonempty");
    geometry.validate();
    power.validate();

    SweepResult result;
    result.n_trials = n_trials;
    result.seed = seed;
    for (const double value : grid) {
        SystemGeometry g = geometry;
        LinkBudget budget = LinkBudget::from_snr_db(fixed_snr_db, noise_power);
        switch (axis) {
            case SweepAxis::snr_db:
                budget = LinkBudget::from_snr_db(value, noise_power);
                break;
            case SweepAxis::kappa:
                if (!(value >= 0.0))
                    throw std::invalid_argument("grid: kappa values must be >= 0");
                g.rician_bs_ris = value;
                g.rician_ris_ue = value;
                break;
            case SweepAxis::n_ris_elements: {
                const int n = static_cast<int>(value);
                if (n < 1 || static_cast<double>(n) != value)
                    throw std::invalid_argument("grid: element counts must be positive integers");
                if (n % geometry.block_size != 0)
                    throw std::invalid_argument(
                        "grid: element count " + std::to_string(n) +
                        " is not a multiple of block_size " +
                        std::to_string(geometry.block_size));
                g.n_ris_elements = n;
                g.n_blocks = n / geometry.block_size;
                break;
            }
        }
        evaluate_point(g, power, budget, n_trials, seed, value, result);
    }
    return result;
}

std::vector<TightnessRow> bound_tightness_study(std::span<const SystemGeometry> geometry_family,
                                                std::span<const double> kappa_grid, int n_trials,
                                                std::uint64_t seed, const LinkBudget& budget) {
    for (std::size_t i = 1; i < kappa_grid.size(); ++i)
        if (!(kappa_grid[i] > kappa_grid[i - 1]))
            throw std::invalid_argument("kappa_grid: must be strictly ascending");

    std::vector<TightnessRow> rows;
    for (const SystemGeometry& base : geometry_family) {
        base.validate();
        for (const double kappa : kappa_grid) {
            SystemGeometry g = base;
            g.rician_bs_ris = kappa;
            g.rician_ris_ue = kappa;

            RisConfiguration config;
            const double theta = optimal_rotation(g.aoa_ris, g.aod_ris);
            config.rotation_angles.assign(g.n_blocks, theta);
            config.reflection_phases = optimal_phases(g);

            const MonteCarloEstimate mc = estimate_average_se(g, config, budget, n_trials, seed);
            const double bound = se_upper_bound_bc(g, config, budget);
            rows.push_back({g.n_ris_elements, kappa, mc.mean, mc.std_error, bound,
                            bound - mc.mean});
        }
    }
    return rows;
}

}  // namespace risim
