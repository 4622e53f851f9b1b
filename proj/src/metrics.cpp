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

#include "risim/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>

#include "risim/design.hpp"

namespace risim {

namespace {

constexpr double kPi = std::numbers::pi;

/// C1 and C2 of the averaged-SE bound.
std::pair<double, double> bound_constants(const SystemGeometry& g) {
    if (g.los_only) {
        // kappa -> infinity limit: the coherent constant saturates at N_b and
        // the scattered constant vanishes.
        return {static_cast<double>(g.n_bs_antennas), 0.0};
    }
    const double k1 = g.rician_bs_ris;
    const double k2 = g.rician_ris_ue;
    const double denom = (k1 + 1.0) * (k2 + 1.0);
    const double c1 = g.n_bs_antennas * k1 * k2 / denom;
    const double c2 = g.n_bs_antennas * static_cast<double>(g.n_ris_elements) *
                      (k2 + k1 + 1.0) / denom;
    return {c1, c2};
}

}  // namespace

LinkBudget LinkBudget::from_snr_db(double snr_db, double noise_power) {
    if (!std::isfinite(snr_db)) throw std::invalid_argument("snr_db: must be finite");
    if (!(noise_power > 0.0) || !std::isfinite(noise_power))
        throw std::invalid_argument("noise_power: must be finite and > 0");
    LinkBudget b;
    b.snr_db = snr_db;
    b.noise_power = noise_power;
    b.transmit_power = std::pow(10.0, snr_db / 10.0) * noise_power;
    return b;
}

LinkBudget LinkBudget::from_power(double transmit_power, double noise_power) {
    if (!(transmit_power >= 0.0) || !std::isfinite(transmit_power))
        throw std::invalid_argument("transmit_power: must be finite and >= 0");
    if (!(noise_power > 0.0) || !std::isfinite(noise_power))
        throw std::invalid_argument("noise_power: must be finite and > 0");
    LinkBudget b;
    b.transmit_power = transmit_power;
    b.noise_power = noise_power;
    b.snr_db = 10.0 * std::log10(transmit_power / noise_power);
    return b;
}

SeBoundTerms se_bound_terms(const SystemGeometry& geometry, const RisConfiguration& config) {
    geometry.validate();
    const int n_blocks = geometry.n_blocks;
    const int block = geometry.block_size;
    if (static_cast<int>(config.reflection_phases.size()) != n_blocks)
        throw std::invalid_argument("reflection_phases: expected length " +
                                    std::to_string(n_blocks));
    if (static_cast<int>(config.rotation_angles.size()) != n_blocks)
        throw std::invalid_argument("rotation_angles: expected length " +
                                    std::to_string(n_blocks));

    SeBoundTerms terms;
    std::tie(terms.c1, terms.c2) = bound_constants(geometry);
    terms.r1.resize(n_blocks);
    terms.r2.resize(static_cast<std::size_t>(n_blocks) * block);

    const double angle_sum = std::cos(geometry.aod_ris) + std::cos(geometry.aoa_ris);
    std::complex<double> outer = 0.0;
    for (int k = 1; k <= n_blocks; ++k) {
        terms.r1[k - 1] = config.reflection_phases[k - 1] + (k - 1) * block * kPi * angle_sum;
        const double theta = config.rotation_angles[k - 1];
        const double rotated_sum =
            std::cos(geometry.aod_ris - theta) + std::cos(geometry.aoa_ris - theta);
        std::complex<double> inner = 0.0;
        for (int i = 1; i <= block; ++i) {
            const double r2 = 0.5 * kPi * (block - 2 * i + 1) * rotated_sum;
            terms.r2[static_cast<std::size_t>(k - 1) * block + (i - 1)] = r2;
            inner += std::polar(1.0, -r2);
        }
        outer += std::polar(1.0, terms.r1[k - 1]) * inner;
    }
    terms.coherent_gain = std::norm(outer);
    return terms;
}

cvec mrt_precoder(const cvec& h) {
    double norm_sq = 0.0;
    for (const auto& x : h) norm_sq += std::norm(x);
    if (!(norm_sq > 0.0)) throw std::domain_error("mrt_precoder: degenerate zero channel");
    const double inv = 1.0 / std::sqrt(norm_sq);
    cvec f(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) f[i] = h[i] * inv;
    return f;
}

double se_instantaneous(const ComplexMatrix& bs_ris, const cvec& ris_ue, const cvec& reflection,
                        const LinkBudget& budget) {
    const double gain = cascaded_gain(bs_ris, ris_ue, reflection);
    return std::log2(1.0 + budget.snr_linear() * gain);
}

double se_upper_bound_bc(const SystemGeometry& geometry, const RisConfiguration& config,
                         const LinkBudget& budget) {
    const SeBoundTerms terms = se_bound_terms(geometry, config);
    return std::log2(1.0 +
                     budget.snr_linear() * (terms.c1 * terms.coherent_gain + terms.c2));
}

double se_upper_bound_ec(const SystemGeometry& geometry, std::span<const double> phases,
                         const LinkBudget& budget) {
    const SystemGeometry ec = geometry.element_controlled();
    if (static_cast<int>(phases.size()) != ec.n_blocks)
        throw std::invalid_argument("phases: expected length " + std::to_string(ec.n_blocks) +
                                    ", got " + std::to_string(phases.size()));
    RisConfiguration config = RisConfiguration::zeros(ec.n_blocks);
    config.reflection_phases.assign(phases.begin(), phases.end());
    return se_upper_bound_bc(ec, config, budget);
}

double se_gap(const SystemGeometry& geometry, std::span<const double> rotations,
              const LinkBudget& budget) {
    geometry.validate();
    if (static_cast<int>(rotations.size()) != geometry.n_blocks)
        throw std::invalid_argument("rotations: expected length " +
                                    std::to_string(geometry.n_blocks));

    const SystemGeometry ec = geometry.element_controlled();
    const double bound_ec = se_upper_bound_ec(geometry, optimal_phases(ec), budget);

    RisConfiguration bc;
    bc.rotation_angles.assign(rotations.begin(), rotations.end());
    bc.reflection_phases = optimal_phases(geometry);
    const double bound_bc = se_upper_bound_bc(geometry, bc, budget);
    return bound_ec - bound_bc;
}

double se_gap_single_log(const SystemGeometry& geometry, double theta, const LinkBudget& budget) {
    geometry.validate();
    const auto [c1, c2] = bound_constants(geometry);
    const int block = geometry.block_size;
    const double rotated_sum =
        std::cos(geometry.aod_ris - theta) + std::cos(geometry.aoa_ris - theta);
    std::complex<double> inner = 0.0;
    for (int i = 1; i <= block; ++i)
        inner += std::polar(1.0, -0.5 * kPi * (block - 2 * i + 1) * rotated_sum);

    const double n_s = geometry.n_ris_elements;
    const double k = geometry.n_blocks;
    const double p = budget.transmit_power;
    const double s2 = budget.noise_power;
    const double num = p * (c1 * n_s * n_s + c2) + s2;
    const double den = p * (c1 * k * k * std::norm(inner) + c2) + s2;
    return std::log2(num / den);
}

double energy_efficiency(double se, double total_power) {
    if (!(total_power > 0.0) || !std::isfinite(total_power))
        throw std::invalid_argument("total_power: must be finite and > 0");
    return se / total_power;
}

}  // namespace risim
