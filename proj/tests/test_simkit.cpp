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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "risim/design.hpp"
#include "risim/omp_compat.hpp"
#include "risim/simkit.hpp"

using namespace risim;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

SystemGeometry case_geometry(int n_s, int k, double kappa) {
    SystemGeometry g;
    g.n_bs_antennas = 32;
    g.n_ris_elements = n_s;
    g.n_blocks = k;
    g.block_size = n_s / k;
    g.aoa_ris = pi / 2;
    g.aod_ris = pi / 3;
    g.aod_bs = pi / 4;
    g.rician_bs_ris = kappa;
    g.rician_ris_ue = kappa;
    return g;
}

RisConfiguration optimal_design(const SystemGeometry& g) {
    RisConfiguration c;
    c.rotation_angles.assign(g.n_blocks, optimal_rotation(g.aoa_ris, g.aod_ris));
    c.reflection_phases = optimal_phases(g);
    return c;
}

PowerParams case3_power() {
    PowerParams p;
    p.rotate_circuit_power = 0.430;
    p.unit_rotation_power = 0.003;
    return p;
}

}  // namespace

TEST_CASE("estimate determinism and the serial reference") {
    const SystemGeometry g = case_geometry(16, 8, 4.0);
    const RisConfiguration c = optimal_design(g);
    const LinkBudget b = LinkBudget::from_snr_db(10.0);

    SUBCASE("same seed, same estimate, to the last bit") {
        const auto e1 = estimate_average_se(g, c, b, 500, 99);
        const auto e2 = estimate_average_se(g, c, b, 500, 99);
        CHECK(e1.mean == e2.mean);
        CHECK(e1.std_error == e2.std_error);
    }
    SUBCASE("parallel kernel reproduces the serial reference bit for bit") {
        const auto serial = estimate_average_se_serial(g, c, b, 1000, 7);
        const auto parallel = estimate_average_se(g, c, b, 1000, 7);
        CHECK(serial.mean == parallel.mean);
        CHECK(serial.std_error == parallel.std_error);
    }
    SUBCASE("different seeds move the estimate") {
        const auto e1 = estimate_average_se(g, c, b, 500, 1);
        const auto e2 = estimate_average_se(g, c, b, 500, 2);
        CHECK(e1.mean != e2.mean);
    }
    SUBCASE("rejects degenerate trial counts") {
        CHECK_THROWS_AS(estimate_average_se(g, c, b, 1, 0), std::invalid_argument);
    }
}

TEST_CASE("line-of-sight-only estimates are deterministic with zero spread") {
    SystemGeometry g = case_geometry(16, 8, 10.0);
    g.los_only = true;
    const RisConfiguration c = optimal_design(g);
    const LinkBudget b = LinkBudget::from_power(1.0);
    const auto e = estimate_average_se(g, c, b, 50, 5);
    CHECK(e.std_error == 0.0);
    const double n_s = g.n_ris_elements;
    CHECK(e.mean == Approx(std::log2(1.0 + 32.0 * n_s * n_s)).epsilon(1e-12));
}

TEST_CASE("standard error scales like the square root of the trial count") {
    const SystemGeometry g = case_geometry(16, 8, 1.0);
    const RisConfiguration c = optimal_design(g);
    const LinkBudget b = LinkBudget::from_snr_db(10.0);
    const auto small = estimate_average_se(g, c, b, 2000, 3);
    const auto large = estimate_average_se(g, c, b, 8000, 3);
    const double ratio = small.std_error / large.std_error;
    CHECK(ratio > 2.0 / 1.5);
    CHECK(ratio < 2.0 * 1.5);
}

TEST_CASE("monte carlo mean respects the analytical bound") {
    const SystemGeometry g = case_geometry(64, 32, 10.0);
    const RisConfiguration c = optimal_design(g);
    const LinkBudget b = LinkBudget::from_snr_db(10.0);
    const auto e = estimate_average_se(g, c, b, 4000, 11);
    const double bound = se_upper_bound_bc(g, c, b);
    CHECK(e.mean <= bound + 3.0 * e.std_error);
    // the bound is tight at this Rician factor: within one percent
    CHECK(e.mean > 0.99 * bound);
}

TEST_CASE("snr sweep composition") {
    const SystemGeometry g = case_geometry(64, 32, 10.0);
    const PowerParams p = case3_power();

    SUBCASE("single-point grid reduces to the estimate plus power arithmetic") {
        const double grid[] = {0.0};
        const SweepResult r = run_snr_sweep(g, p, grid, 400, 21);
        REQUIRE(r.axis_values.size() == 1);

        const double theta = optimal_rotation(g.aoa_ris, g.aod_ris);
        const SegmentationResult seg = optimal_block_count(p, 64, theta);
        SystemGeometry bc = g;
        bc.n_blocks = seg.chosen_k;
        bc.block_size = seg.chosen_m;
        const auto direct =
            estimate_average_se(bc, optimal_design(bc), LinkBudget::from_snr_db(0.0), 400, 21);
        CHECK(r.mean_se[0] == direct.mean);
        CHECK(r.se_std_error[0] == direct.std_error);
        CHECK(r.p_ec_watts[0] == Approx(power_ec(p, 64, 1.0)).epsilon(1e-12));
        CHECK(r.p_bc_watts[0] ==
              Approx(power_bc_uniform(p, bc, theta, 1.0)).epsilon(1e-12));
        CHECK(r.k_star[0] == seg.chosen_k);
        CHECK(r.mean_ee_bc[0] == Approx(r.mean_se[0] / r.p_bc_watts[0]).epsilon(1e-12));
    }
    SUBCASE("both schemes share the same analytical bound at every point") {
        const double grid[] = {-10.0, 0.0, 10.0};
        const SweepResult r = run_snr_sweep(g, p, grid, 200, 5);
        for (std::size_t i = 0; i < r.axis_values.size(); ++i)
            CHECK(std::fabs(r.bound_se[i] - r.bound_se_ec[i]) < 1e-10);
    }
    SUBCASE("low-power rotation hardware beats element control at low snr") {
        const double grid[] = {-10.0};
        const SweepResult r = run_snr_sweep(g, p, grid, 2000, 8);
        CHECK(r.mean_ee_bc[0] > r.mean_ee_ec[0]);
    }
    SUBCASE("empty grids are rejected") {
        CHECK_THROWS_AS(run_snr_sweep(g, p, {}, 100, 1), std::invalid_argument);
    }
}

TEST_CASE("axis sweeps over rician factor and element count") {
    const SystemGeometry g = case_geometry(64, 32, 10.0);
    const PowerParams p = case3_power();
    SUBCASE("kappa axis tracks the grid") {
        const double grid[] = {1.0, 10.0};
        const SweepResult r =
            run_axis_sweep(SweepAxis::kappa, g, p, grid, 300, 13, 1.0, 10.0);
        REQUIRE(r.axis_values.size() == 2);
        // higher rician factor pushes the mean toward the bound
        CHECK(r.bound_se[1] - r.mean_se[1] < r.bound_se[0] - r.mean_se[0]);
    }
    SUBCASE("element-count axis keeps the block size") {
        const double grid[] = {16.0, 64.0};
        const SweepResult r =
            run_axis_sweep(SweepAxis::n_ris_elements, g, p, grid, 200, 13, 1.0, 10.0);
        REQUIRE(r.axis_values.size() == 2);
        CHECK(r.bound_se[1] > r.bound_se[0]);
        const double bad_grid[] = {15.0};
        CHECK_THROWS_AS(
            run_axis_sweep(SweepAxis::n_ris_elements, g, p, bad_grid, 200, 13, 1.0, 10.0),
            std::invalid_argument);
    }
}

TEST_CASE("bound tightness study") {
    const SystemGeometry family[] = {case_geometry(16, 8, 10.0), case_geometry(64, 32, 10.0)};
    const double kappas[] = {1.0, 10.0};
    const auto rows =
        bound_tightness_study(family, kappas, 3000, 17, LinkBudget::from_snr_db(10.0));
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        CHECK(row.gap == Approx(row.bound - row.mean_se));
        CHECK(row.gap > -3.0 * row.std_error); // bound dominates statistically
    }
    // gap narrows with the rician factor at fixed size (3 sigma allowance)
    CHECK(rows[1].gap <=
          rows[0].gap + 3.0 * std::sqrt(rows[0].std_error * rows[0].std_error +
                                        rows[1].std_error * rows[1].std_error));
    CHECK(rows[3].gap <=
          rows[2].gap + 3.0 * std::sqrt(rows[2].std_error * rows[2].std_error +
                                        rows[3].std_error * rows[3].std_error));
    // unsorted grids are rejected
    const double bad[] = {10.0, 1.0};
    CHECK_THROWS_AS(bound_tightness_study(family, bad, 100, 1, LinkBudget::from_snr_db(0.0)),
                    std::invalid_argument);

    SUBCASE("gaps are stable under reseeding") {
        const auto reseeded =
            bound_tightness_study(family, kappas, 3000, 99, LinkBudget::from_snr_db(10.0));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const double combined = std::sqrt(rows[i].std_error * rows[i].std_error +
                                              reseeded[i].std_error * reseeded[i].std_error);
            CHECK(std::fabs(rows[i].gap - reseeded[i].gap) < 4.0 * combined);
        }
    }
    SUBCASE("the deterministic limit closes the gap entirely") {
        SystemGeometry g = case_geometry(16, 8, 10.0);
        g.los_only = true;
        const RisConfiguration c = optimal_design(g);
        const LinkBudget b = LinkBudget::from_snr_db(10.0);
        const auto e = estimate_average_se(g, c, b, 100, 1);
        CHECK(std::fabs(se_upper_bound_bc(g, c, b) - e.mean) < 1e-12);
    }
}
