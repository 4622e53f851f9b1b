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
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "risim/channel.hpp"

using namespace risim;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

SystemGeometry small_geometry(int n_blocks, int block_size) {
    SystemGeometry g;
    g.n_bs_antennas = 2;
    g.n_ris_elements = n_blocks * block_size;
    g.n_blocks = n_blocks;
    g.block_size = block_size;
    g.aoa_ris = pi / 3;
    g.aod_ris = pi / 2;
    g.aod_bs = pi / 4;
    g.rician_bs_ris = 1.0;
    g.rician_ris_ue = 1.0;
    return g;
}

}  // namespace

TEST_CASE("bs_array_response basics") {
    SUBCASE("broadside gives constant entries") {
        const cvec a = bs_array_response(pi / 2, 4);
        for (const auto& x : a) {
            CHECK(x.real() == Approx(0.5).epsilon(1e-12));
            CHECK(std::fabs(x.imag()) < 1e-12);
        }
    }
    SUBCASE("single antenna is the scalar 1") {
        const cvec a = bs_array_response(1.234, 1);
        REQUIRE(a.size() == 1);
        CHECK(a[0].real() == Approx(1.0));
        CHECK(std::fabs(a[0].imag()) < 1e-15);
    }
    SUBCASE("sixty-degree steering walks the quadrants") {
        // cos(pi/3) = 1/2 -> phases 0, pi/2, pi, 3pi/2
        const cvec a = bs_array_response(pi / 3, 4);
        const cvec expected = {{0.5, 0.0}, {0.0, 0.5}, {-0.5, 0.0}, {0.0, -0.5}};
        for (int i = 0; i < 4; ++i) CHECK(std::abs(a[i] - expected[i]) < 1e-12);
    }
    SUBCASE("unit norm for arbitrary sizes") {
        for (int n : {1, 3, 17, 64}) {
            double norm_sq = 0.0;
            for (const auto& x : bs_array_response(0.7, n)) norm_sq += std::norm(x);
            CHECK(norm_sq == Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("rejects bad arguments") {
        CHECK_THROWS_AS(bs_array_response(0.5, 0), std::invalid_argument);
        CHECK_THROWS_AS(bs_array_response(std::nan(""), 4), std::invalid_argument);
    }
}

TEST_CASE("ris_array_response phase structure") {
    SUBCASE("hand-evaluated two-block case") {
        // K=2, M=2, angle=pi/3, no rotation: phases -pi/4, pi/4, 3pi/4, 5pi/4.
        SystemGeometry g = small_geometry(2, 2);
        const cvec a = ris_array_response(pi / 3, std::vector<double>{0.0, 0.0}, g);
        const double expected[] = {-pi / 4, pi / 4, 3 * pi / 4, -3 * pi / 4};
        for (int i = 0; i < 4; ++i) {
            CHECK(std::abs(a[i]) == Approx(0.5).epsilon(1e-12));
            CHECK(std::arg(a[i]) == Approx(expected[i]).epsilon(1e-12));
        }
    }
    SUBCASE("specular alignment zeroes the local phases") {
        SystemGeometry g = small_geometry(3, 4);
        const double angle = 0.9;
        const std::vector<double> rot(3, angle - pi / 2); // cos(angle - theta) = 0
        const cvec a = ris_array_response(angle, rot, g);
        const double scale = 1.0 / std::sqrt(12.0);
        for (int k = 0; k < 3; ++k) {
            const std::complex<double> block_phase =
                std::polar(scale, k * 4 * pi * std::cos(angle));
            for (int m = 0; m < 4; ++m) CHECK(std::abs(a[k * 4 + m] - block_phase) < 1e-12);
        }
    }
    SUBCASE("one element per block reduces to the plain array response") {
        SystemGeometry g = small_geometry(6, 1);
        const std::vector<double> rot(6, 0.0);
        const cvec a = ris_array_response(0.8, rot, g);
        const cvec b = bs_array_response(0.8, 6);
        for (int i = 0; i < 6; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
    }
    SUBCASE("rejects rotation length mismatch") {
        SystemGeometry g = small_geometry(2, 2);
        CHECK_THROWS_AS(ris_array_response(0.5, std::vector<double>{0.0}, g),
                        std::invalid_argument);
    }
}

TEST_CASE("build_reflection_vector block structure") {
    SystemGeometry g = small_geometry(2, 2);
    SUBCASE("zero phases give the all-ones vector") {
        const cvec v = build_reflection_vector(RisConfiguration::zeros(2), g);
        for (const auto& x : v) CHECK(std::abs(x - std::complex<double>{1.0, 0.0}) < 1e-15);
    }
    SUBCASE("pi phase flips the second block") {
        RisConfiguration c = RisConfiguration::zeros(2);
        c.reflection_phases = {0.0, pi};
        const cvec v = build_reflection_vector(c, g);
        CHECK(std::abs(v[0] - std::complex<double>{1, 0}) < 1e-12);
        CHECK(std::abs(v[1] - std::complex<double>{1, 0}) < 1e-12);
        CHECK(std::abs(v[2] - std::complex<double>{-1, 0}) < 1e-12);
        CHECK(std::abs(v[3] - std::complex<double>{-1, 0}) < 1e-12);
    }
    SUBCASE("element-controlled special case keeps per-element phases") {
        SystemGeometry ec = small_geometry(4, 1);
        RisConfiguration c = RisConfiguration::zeros(4);
        c.reflection_phases = {0.1, 0.2, 0.3, 0.4};
        const cvec v = build_reflection_vector(c, ec);
        for (int i = 0; i < 4; ++i)
            CHECK(std::arg(v[i]) == Approx(c.reflection_phases[i]).epsilon(1e-12));
    }
    SUBCASE("every entry is unimodular") {
        SystemGeometry g2 = small_geometry(5, 3);
        RisConfiguration c = RisConfiguration::zeros(5);
        rng::Xoshiro256pp gen(3);
        for (auto& p : c.reflection_phases) p = gen.uniform(-10.0, 10.0);
        for (const auto& x : build_reflection_vector(c, g2))
            CHECK(std::abs(x) == Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("rejects phase length mismatch") {
        RisConfiguration c = RisConfiguration::zeros(3);
        CHECK_THROWS_AS(build_reflection_vector(c, g), std::invalid_argument);
    }
}

TEST_CASE("sample_channels statistics and determinism") {
    SUBCASE("los_only draws are exact and consume no randomness") {
        SystemGeometry g = small_geometry(2, 2);
        g.los_only = true;
        const std::vector<double> rot(2, 0.1);
        rng::Xoshiro256pp gen(5);
        const auto s1 = sample_channels(g, rot, gen);
        const auto s2 = sample_channels(g, rot, gen);
        CHECK(s1.bs_ris.data == s2.bs_ris.data);
        CHECK(s1.ris_ue == s2.ris_ue);

        // matches the dyadic line-of-sight structure exactly
        const cvec a_s = ris_array_response(g.aoa_ris, rot, g);
        const cvec a_b = bs_array_response(g.aod_bs, g.n_bs_antennas);
        const double amp = std::sqrt(4.0 * 2.0);
        for (int n = 0; n < 4; ++n)
            for (int j = 0; j < 2; ++j)
                CHECK(std::abs(s1.bs_ris(n, j) - amp * a_s[n] * std::conj(a_b[j])) < 1e-12);
    }
    SUBCASE("fixed seed reproduces bit-identical draws") {
        SystemGeometry g = small_geometry(2, 2);
        const std::vector<double> rot(2, 0.0);
        rng::Xoshiro256pp g1 = rng::Xoshiro256pp::for_stream(77, 3);
        rng::Xoshiro256pp g2 = rng::Xoshiro256pp::for_stream(77, 3);
        const auto s1 = sample_channels(g, rot, g1);
        const auto s2 = sample_channels(g, rot, g2);
        CHECK(s1.bs_ris.data == s2.bs_ris.data);
        CHECK(s1.ris_ue == s2.ris_ue);
    }
    SUBCASE("rayleigh mode has zero mean and unit entry variance") {
        SystemGeometry g = small_geometry(2, 2);
        g.rician_bs_ris = 0.0;
        g.rician_ris_ue = 0.0;
        const std::vector<double> rot(2, 0.0);
        const int n_draws = 100000;
        const int entries = 4 * 2;
        std::vector<std::complex<double>> mean(entries, 0.0);
        std::vector<double> var(entries, 0.0);
        rng::Xoshiro256pp gen = rng::Xoshiro256pp::for_stream(11, 0);
        for (int t = 0; t < n_draws; ++t) {
            const auto s = sample_channels(g, rot, gen);
            for (int e = 0; e < entries; ++e) {
                mean[e] += s.bs_ris.data[e];
                var[e] += std::norm(s.bs_ris.data[e]);
            }
        }
        // |z|^2 is exponential(1): sd of its sample mean is 1/sqrt(n)
        const double se_var = 1.0 / std::sqrt(static_cast<double>(n_draws));
        const double se_mean = 1.0 / std::sqrt(2.0 * n_draws);
        for (int e = 0; e < entries; ++e) {
            CHECK(std::fabs(var[e] / n_draws - 1.0) < 3.0 * se_var);
            CHECK(std::fabs(mean[e].real() / n_draws) < 3.0 * se_mean);
            CHECK(std::fabs(mean[e].imag() / n_draws) < 3.0 * se_mean);
        }
    }
}

TEST_CASE("effective_channel against the brute-force expansion") {
    SystemGeometry g = small_geometry(2, 2);
    rng::Xoshiro256pp gen = rng::Xoshiro256pp::for_stream(123, 0);
    const std::vector<double> rot = {0.05, -0.1};
    const auto s = sample_channels(g, rot, gen);
    RisConfiguration c{{0.05, -0.1}, {0.3, 1.2}};
    const cvec v = build_reflection_vector(c, g);

    SUBCASE("matches the triple-loop oracle") {
        const cvec h = effective_channel(s.bs_ris, s.ris_ue, v);
        double norm_sq = 0.0;
        for (const auto& x : h) norm_sq += std::norm(x);
        CHECK(norm_sq == Approx(oracles::cascaded_gain_brute(s.bs_ris, s.ris_ue, v))
                             .epsilon(1e-12));
        CHECK(cascaded_gain(s.bs_ris, s.ris_ue, v) == Approx(norm_sq).epsilon(1e-14));
    }
    SUBCASE("zero user-side channel gives the zero vector") {
        const cvec zero(s.ris_ue.size(), 0.0);
        for (const auto& x : effective_channel(s.bs_ris, zero, v)) CHECK(std::abs(x) == 0.0);
    }
    SUBCASE("scalar reduction") {
        ComplexMatrix G(1, 1);
        G(0, 0) = {0.4, -0.3};
        const cvec gv = {{1.5, 0.5}};
        const cvec refl = {std::polar(1.0, 0.7)};
        const cvec h = effective_channel(G, gv, refl);
        REQUIRE(h.size() == 1);
        CHECK(std::abs(h[0] - std::conj(gv[0] * refl[0] * G(0, 0))) < 1e-15);
    }
    SUBCASE("linear in the user-side channel and in matrix columns") {
        rng::Xoshiro256pp gen2 = rng::Xoshiro256pp::for_stream(9, 1);
        const auto s2 = sample_channels(g, rot, gen2);
        cvec sum_g(s.ris_ue.size());
        for (std::size_t i = 0; i < sum_g.size(); ++i) sum_g[i] = s.ris_ue[i] + s2.ris_ue[i];
        const cvec h_sum = effective_channel(s.bs_ris, sum_g, v);
        const cvec h1 = effective_channel(s.bs_ris, s.ris_ue, v);
        const cvec h2 = effective_channel(s.bs_ris, s2.ris_ue, v);
        for (std::size_t j = 0; j < h_sum.size(); ++j)
            CHECK(std::abs(h_sum[j] - (h1[j] + h2[j])) < 1e-12);
    }
    SUBCASE("realization stores a reproducible cascade") {
        const ChannelRealization real = make_realization(s, v);
        const cvec again =
            effective_channel(real.bs_ris_matrix, real.ris_ue_vector, v);
        for (std::size_t j = 0; j < again.size(); ++j)
            CHECK(std::abs(real.effective_channel[j] - again[j]) == 0.0);
    }
    SUBCASE("rejects dimension mismatch") {
        const cvec short_g(3);
        CHECK_THROWS_AS(effective_channel(s.bs_ris, short_g, v), std::invalid_argument);
    }
}

TEST_CASE("geometry validation") {
    SystemGeometry g = small_geometry(2, 2);
    g.n_ris_elements = 5;
    CHECK_THROWS_WITH_AS(g.validate(), "n_ris_elements: must equal n_blocks * block_size",
                         std::invalid_argument);
    g = small_geometry(2, 2);
    g.aoa_ris = -0.1;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    g = small_geometry(2, 2);
    g.rician_bs_ris = -1.0;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("wrap_angle maps into (-pi, pi]") {
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(pi) == Approx(pi));
    CHECK(wrap_angle(-pi) == Approx(pi));
    CHECK(wrap_angle(3 * pi) == Approx(pi));
    CHECK(wrap_angle(2 * pi + 0.25) == Approx(0.25));
    CHECK(wrap_angle(-7 * pi / 2) == Approx(pi / 2));
}
