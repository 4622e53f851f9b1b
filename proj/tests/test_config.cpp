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

#include <string>

#include "risim/config.hpp"
#include "risim/experiment.hpp"

using namespace risim;
using doctest::Approx;

namespace {

const char* kMinimal = R"([geometry]
n_ris_elements = 64
n_blocks = 32
aoa_ris_rad = 1.5707963267948966
aod_ris_rad = 1.0471975511965976

[sweep]
axis = snr_db
grid = -10 0 10
)";

std::string with_line(const std::string& base, const std::string& extra) {
    return base + extra + "\n";
}

}  // namespace

TEST_CASE("minimal config picks up the documented defaults") {
    const ExperimentConfig c = parse_config(kMinimal);
    CHECK(c.geometry.n_bs_antennas == 32);
    CHECK(c.geometry.block_size == 2);
    CHECK(c.geometry.rician_bs_ris == 10.0);
    CHECK(c.power.static_power == 12.0);
    CHECK(c.power.phase_circuit_power == Approx(0.12));
    CHECK(c.power.amplifier_slope == Approx(1.2));
    CHECK(c.noise_power == 1.0);
    CHECK(c.sweep.n_trials == 10000);
    CHECK(c.sweep.seed == 1);
    CHECK(c.output_path == "risim_out.csv");
    CHECK(!c.geometry.los_only);
}

TEST_CASE("field-precise diagnostics") {
    SUBCASE("missing sweep axis") {
        const char* text = R"([geometry]
n_ris_elements = 64
n_blocks = 32
aoa_ris_rad = 1.5
aod_ris_rad = 1.0

[sweep]
grid = 0
)";
        CHECK_THROWS_WITH_AS(parse_config(text), "sweep.axis required", ConfigError);
    }
    SUBCASE("empty sweep section") {
        const char* text = R"([geometry]
n_ris_elements = 64
n_blocks = 32
aoa_ris_rad = 1.5
aod_ris_rad = 1.0

[sweep]
)";
        CHECK_THROWS_WITH_AS(parse_config(text), "sweep.axis required", ConfigError);
    }
    SUBCASE("block count must divide the element count") {
        const char* text = R"([geometry]
n_ris_elements = 64
n_blocks = 7
aoa_ris_rad = 1.5
aod_ris_rad = 1.0

[sweep]
axis = snr_db
grid = 0
)";
        CHECK_THROWS_WITH_AS(parse_config(text),
                             "geometry.n_blocks (7) must divide n_ris_elements (64)",
                             ConfigError);
    }
    SUBCASE("out-of-range angle names the field") {
        std::string text = kMinimal;
        text.replace(text.find("aoa_ris_rad = 1.5707963267948966"),
                     std::string("aoa_ris_rad = 1.5707963267948966").size(),
                     "aoa_ris_rad = 3.5");
        try {
            parse_config(text);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("aoa_ris") != std::string::npos);
        }
    }
    SUBCASE("unknown keys are rejected with their line") {
        try {
            parse_config(with_line(kMinimal, "mystery_knob = 3"));
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("unknown key 'mystery_knob'") != std::string::npos);
            CHECK(msg.find("line") != std::string::npos);
        }
    }
    SUBCASE("duplicate keys are rejected") {
        CHECK_THROWS_AS(parse_config(with_line(kMinimal, "grid = 5")), ConfigError);
    }
    SUBCASE("malformed numbers are rejected") {
        CHECK_THROWS_AS(parse_config(with_line(kMinimal, "n_trials = soon")), ConfigError);
    }
    SUBCASE("unknown axis is rejected") {
        std::string text = kMinimal;
        text.replace(text.find("axis = snr_db"), std::string("axis = snr_db").size(),
                     "axis = moon_phase");
        CHECK_THROWS_AS(parse_config(text), ConfigError);
    }
    SUBCASE("unknown section is rejected") {
        CHECK_THROWS_AS(parse_config(std::string(kMinimal) + "\n[telemetry]\nx = 1\n"),
                        ConfigError);
    }
}

TEST_CASE("serialization round-trips exactly") {
    SUBCASE("minimal config") {
        const ExperimentConfig c = parse_config(kMinimal);
        const std::string text = serialize_config(c);
        const ExperimentConfig again = parse_config(text);
        CHECK(serialize_config(again) == text);
    }
    SUBCASE("bundled presets") {
        for (const auto& name : preset_names()) {
            const ExperimentConfig c = parse_config(preset_config_text(name));
            const std::string text = serialize_config(c);
            CHECK(serialize_config(parse_config(text)) == text);
        }
    }
    SUBCASE("awkward floating-point values survive") {
        ExperimentConfig c = parse_config(kMinimal);
        c.geometry.aoa_ris = 0.1 + 0.2; // not exactly 0.3
        c.power.unit_rotation_power = 1e-9;
        c.sweep.grid = {-10.0, 1.0 / 3.0, 12345.6789};
        const std::string text = serialize_config(c);
        const ExperimentConfig again = parse_config(text);
        CHECK(again.geometry.aoa_ris == c.geometry.aoa_ris);
        CHECK(again.power.unit_rotation_power == c.power.unit_rotation_power);
        CHECK(again.sweep.grid == c.sweep.grid);
    }
}

TEST_CASE("feasibility map config") {
    const char* text = R"([feasibility]
p1_w = 0.12
n_ris_elements = 32
p2_min = 0
p2_max = 0.6
p2_points = 10
p_unit_min = 0
p_unit_max = 0.9
p_unit_points = 10

[output]
path = map.csv
)";
    const FeasibilityMapConfig c = parse_feasibility_config(text);
    CHECK(c.p2_points == 10);
    CHECK(c.output_path == "map.csv");
    CHECK_THROWS_AS(parse_feasibility_config("[feasibility]\np2_points = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_feasibility_config("[feasibility]\nwhat = 1\n"), ConfigError);
}

TEST_CASE("csv number format") {
    CHECK(format_csv_number(0.0) == "0");
    CHECK(format_csv_number(-10.0) == "-10");
    CHECK(format_csv_number(0.0001) == "0.0001");
    CHECK(format_csv_number(0.00009) == "9.00000000000e-05");
    CHECK(format_csv_number(12019.68) == "12019.68");
    CHECK(format_csv_number(1.0 / 3.0) == "0.333333333333");
}
