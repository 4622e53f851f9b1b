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

#include "risim/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risim {

namespace {

constexpr double kPi = std::numbers::pi;

SystemGeometry power_geometry(int n_elements, int n_blocks) {
    SystemGeometry g;
    g.n_bs_antennas = 1;
    g.n_ris_elements = n_elements;
    g.n_blocks = n_blocks;
    g.block_size = n_elements / n_blocks;
    return g;
}

/// Block-count-dependent power at zero transmit power.
double segmentation_power(const PowerParams& params, int n_elements, int k, double theta) {
    return power_bc_uniform(params, power_geometry(n_elements, k), theta, 0.0);
}

/// Cheapest among candidate divisors; ties go to the larger block count.
SegmentationResult pick_best(const PowerParams& params, int n_elements,
                             const std::vector<int>& candidates, double theta) {
    SegmentationResult best;
    bool first = true;
    for (const int k : candidates) {
        const double p = segmentation_power(params, n_elements, k, theta);
        if (first || p < best.power_at_chosen ||
            (p == best.power_at_chosen && k > best.chosen_k)) {
            best.chosen_k = k;
            best.chosen_m = n_elements / k;
            best.power_at_chosen = p;
            first = false;
        }
    }
    return best;
}

}  // namespace

std::vector<int> divisors(int n) {
    std::vector<int> low, high;
    for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::vector<double> optimal_phases(const SystemGeometry& geometry) {
    geometry.validate();
    const double angle_sum = std::cos(geometry.aod_ris) + std::cos(geometry.aoa_ris);
    std::vector<double> gamma(geometry.n_blocks);
    for (int k = 1; k <= geometry.n_blocks; ++k)
        gamma[k - 1] = wrap_angle(-(k - 1) * geometry.block_size * kPi * angle_sum);
    return gamma;
}

double optimal_rotation(double aoa, double aod) {
    if (!std::isfinite(aoa) || !std::isfinite(aod))
        throw std::invalid_argument("optimal_rotation: angles must be finite");
    return (aod + aoa) / 2.0 - kPi / 2.0;
}

SegmentationResult optimal_block_count(const PowerParams& params, int n_elements, double theta) {
    params.validate();
    if (n_elements < 1) throw std::invalid_argument("n_elements: must be >= 1");
    const double t = std::fabs(theta);
    if (t > kRotationSectorBound + 1e-12)
        throw std::domain_error("theta: |theta| = " + std::to_string(t) +
                                " outside rotation sector [-pi/6, pi/6]");

    const double n = n_elements;
    SegmentationResult result;

    if (params.unit_rotation_power == 0.0) {
        // Rotation is free; only the per-block circuits matter.
        result.p_ratio = std::numeric_limits<double>::infinity();
        result.continuous_k = 1.0;
        result.branch = SegmentationBranch::single_block;
        const auto best = pick_best(params, n_elements, {1}, theta);
        result.chosen_k = best.chosen_k;
        result.chosen_m = best.chosen_m;
        result.power_at_chosen = best.power_at_chosen;
        return result;
    }

    const double p_ratio =
        (params.phase_circuit_power + params.rotate_circuit_power) / params.unit_rotation_power;
    result.p_ratio = p_ratio;

    // Piecewise closed form for the reported continuous optimum.
    if (t <= 4.0 * p_ratio / (n * n + 1.0)) {
        result.continuous_k = 1.0;
        result.branch = SegmentationBranch::single_block;
    } else if (t >= 0.8 * p_ratio) {
        result.continuous_k = n / 2.0;
        result.branch = SegmentationBranch::full_split;
    } else {
        result.continuous_k = std::sqrt(n * n * t / (4.0 * p_ratio - t));
        result.branch = SegmentationBranch::interior;
    }

    // The block-dependent power K(P1+P2) + K((M^2-1)/4)|t|P_unit with
    // M = N_s/K is convex in K, so the divisor optimum brackets the
    // unconstrained continuous minimizer.
    double k_unconstrained;
    if (t >= 4.0 * p_ratio) {
        k_unconstrained = n; // derivative negative everywhere: split fully
    } else {
        k_unconstrained = std::clamp(std::sqrt(n * n * t / (4.0 * p_ratio - t)), 1.0, n);
    }
    const std::vector<int> divs = divisors(n_elements);
    int lower = 1, upper = n_elements;
    for (const int d : divs)
        if (d <= k_unconstrained) lower = d;
    for (auto it = divs.rbegin(); it != divs.rend(); ++it)
        if (*it >= k_unconstrained) upper = *it;

    const auto best = pick_best(params, n_elements, {lower, upper}, theta);
    result.chosen_k = best.chosen_k;
    result.chosen_m = best.chosen_m;
    result.power_at_chosen = best.power_at_chosen;
    return result;
}

SegmentationResult brute_force_block_count(const PowerParams& params, int n_elements,
                                           double theta) {
    params.validate();
    if (n_elements < 1 || n_elements > (1 << 20))
        throw std::invalid_argument("n_elements: must lie in [1, 2^20]");

    SegmentationResult result = pick_best(params, n_elements, divisors(n_elements), theta);
    result.continuous_k = result.chosen_k;
    result.p_ratio = params.unit_rotation_power == 0.0
                         ? std::numeric_limits<double>::infinity()
                         : (params.phase_circuit_power + params.rotate_circuit_power) /
                               params.unit_rotation_power;
    result.branch = result.chosen_k == 1          ? SegmentationBranch::single_block
                    : 2 * result.chosen_k >= n_elements ? SegmentationBranch::full_split
                                                        : SegmentationBranch::interior;
    return result;
}

const char* to_string(FeasibilityRegime regime) {
    switch (regime) {
        case FeasibilityRegime::r20a: return "20a";
        case FeasibilityRegime::r20b: return "20b";
        case FeasibilityRegime::r20c: return "20c";
        default: return "none";
    }
}

FeasibilityVerdict p2_feasibility(const PowerParams& params, int n_elements) {
    params.validate();
    if (n_elements < 1) throw std::invalid_argument("n_elements: must be >= 1");

    const double p1 = params.phase_circuit_power;
    const double p2 = params.rotate_circuit_power;
    const double pu = params.unit_rotation_power;
    const double n = n_elements;

    // Range edges for the unit-rotation power, evaluated at the given P2.
    const double edge_low = 24.0 * (p1 + p2) / (kPi * (n * n + 1.0));
    const double edge_high = 24.0 * (p1 + p2) / (5.0 * kPi);

    FeasibilityVerdict verdict;
    const double edge_tol = 1e-12 * std::max(1.0, edge_high);
    verdict.on_regime_boundary =
        std::fabs(pu - edge_low) <= edge_tol || std::fabs(pu - edge_high) <= edge_tol;

    // Boundary points take the lower-range classification.
    if (pu <= edge_low) {
        verdict.regime = FeasibilityRegime::r20c;
        verdict.formula_feasible = p2 < (n - 1.0) * p1 - (n * n - 1.0) * kPi * pu / 24.0;
    } else if (pu <= edge_high) {
        verdict.regime = FeasibilityRegime::r20b;
        const double shifted = pu - 12.0 * p1 / kPi;
        verdict.formula_feasible = p2 < shifted * shifted * kPi / (24.0 * pu);
    } else {
        verdict.regime = FeasibilityRegime::r20a;
        verdict.formula_feasible = p2 < p1 - kPi * pu / 8.0;
    }

    // Brute-force margin: worst rotation over the sector, each point using
    // the divisor-optimal segmentation, compared at zero transmit power.
    constexpr int kGridPoints = 1000;
    double worst_bc = 0.0;
    for (int i = 0; i <= kGridPoints; ++i) {
        const double theta = kRotationSectorBound * i / kGridPoints;
        const SegmentationResult seg = optimal_block_count(params, n_elements, theta);
        worst_bc = std::max(worst_bc, seg.power_at_chosen);
    }
    verdict.margin_watts = power_ec(params, n_elements, 0.0) - worst_bc;
    verdict.feasible = verdict.formula_feasible && verdict.margin_watts > 0.0;
    return verdict;
}

}  // namespace risim
