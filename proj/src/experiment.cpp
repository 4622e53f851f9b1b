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

#include "risim/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "risim/design.hpp"
#include "risim/omp_compat.hpp"

namespace risim {

std::string format_csv_number(double v) {
    if (v == 0.0) return "0";
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    if (std::fabs(v) < 1e-4)
        std::snprintf(buf, sizeof buf, "%.11e", v);
    else
        std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << contents;
    out.flush();
    if (!out.good()) throw std::runtime_error("failed writing output file: " + path);
}

double grid_value(double lo, double hi, int points, int i) {
    if (points == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
}

}  // namespace

std::string sweep_to_csv(const SweepResult& r) {
    std::string csv =
        "axis,mean_se_bc,se_stderr,bound_bc,bound_ec,p_ec_watts,p_bc_watts,k_star,ee_bc,ee_ec\n";
    for (std::size_t i = 0; i < r.axis_values.size(); ++i) {
        csv += format_csv_number(r.axis_values[i]) + ',';
        csv += format_csv_number(r.mean_se[i]) + ',';
        csv += format_csv_number(r.se_std_error[i]) + ',';
        csv += format_csv_number(r.bound_se[i]) + ',';
        csv += format_csv_number(r.bound_se_ec[i]) + ',';
        csv += format_csv_number(r.p_ec_watts[i]) + ',';
        csv += format_csv_number(r.p_bc_watts[i]) + ',';
        csv += std::to_string(r.k_star[i]) + ',';
        csv += format_csv_number(r.mean_ee_bc[i]) + ',';
        csv += format_csv_number(r.mean_ee_ec[i]) + '\n';
    }
    return csv;
}

void run_experiment(const ExperimentConfig& config, std::ostream& log) {
    log << "# resolved configuration\n" << serialize_config(config) << std::flush;
    const SweepResult result =
        run_axis_sweep(config.sweep.axis, config.geometry, config.power, config.sweep.grid,
                       config.sweep.n_trials, config.sweep.seed, config.noise_power,
                       config.sweep.fixed_snr_db);
    write_file(config.output_path, sweep_to_csv(result));
    log << "# wrote " << result.axis_values.size() << " rows to " << config.output_path << "\n";
}

void emit_feasibility_map(const FeasibilityMapConfig& config, std::ostream& log) {
    log << "# resolved configuration\n" << serialize_feasibility_config(config) << std::flush;

    const int total = config.p2_points * config.p_unit_points;
    std::vector<FeasibilityVerdict> verdicts(total);

#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < total; ++idx) {
        const int i = idx / config.p_unit_points;
        const int j = idx % config.p_unit_points;
        PowerParams params;
        params.phase_circuit_power = config.p1;
        params.rotate_circuit_power = grid_value(config.p2_min, config.p2_max,
                                                 config.p2_points, i);
        params.unit_rotation_power =
            grid_value(config.p_unit_min, config.p_unit_max, config.p_unit_points, j);
        verdicts[idx] = p2_feasibility(params, config.n_ris_elements);
    }

    std::string csv = "p2,p_unit,regime,feasible,margin_watts\n";
    for (int idx = 0; idx < total; ++idx) {
        const int i = idx / config.p_unit_points;
        const int j = idx % config.p_unit_points;
        const FeasibilityVerdict& v = verdicts[idx];
        csv += format_csv_number(grid_value(config.p2_min, config.p2_max, config.p2_points, i));
        csv += ',';
        csv += format_csv_number(
            grid_value(config.p_unit_min, config.p_unit_max, config.p_unit_points, j));
        csv += ',';
        csv += to_string(v.regime);
        if (v.on_regime_boundary) csv += '*';
        csv += ',';
        csv += v.feasible ? "true" : "false";
        csv += ',';
        csv += format_csv_number(v.margin_watts);
        csv += '\n';
    }
    write_file(config.output_path, csv);
    log << "# wrote " << total << " rows to " << config.output_path << "\n";
}

void dump_channel_realization(const ExperimentConfig& config, std::uint64_t trial,
                              const std::string& output_path) {
    const SystemGeometry& g = config.geometry;
    g.validate();
    RisConfiguration design;
    design.rotation_angles.assign(g.n_blocks, optimal_rotation(g.aoa_ris, g.aod_ris));
    design.reflection_phases = optimal_phases(g);

    rng::Xoshiro256pp gen = rng::Xoshiro256pp::for_stream(config.sweep.seed, trial);
    const ChannelSample sample = sample_channels(g, design.rotation_angles, gen);
    const cvec reflection = build_reflection_vector(design, g);
    const ChannelRealization real = make_realization(sample, reflection);

    const auto pair = [](const std::complex<double>& z) {
        return nlohmann::json::array({z.real(), z.imag()});
    };
    nlohmann::json doc;
    doc["n_ris_elements"] = g.n_ris_elements;
    doc["n_bs_antennas"] = g.n_bs_antennas;
    doc["n_blocks"] = g.n_blocks;
    doc["seed"] = config.sweep.seed;
    doc["trial"] = trial;
    doc["rotation_angles"] = design.rotation_angles;
    doc["reflection_phases"] = design.reflection_phases;
    auto& gmat = doc["bs_ris_matrix"] = nlohmann::json::array();
    for (std::size_t n = 0; n < real.bs_ris_matrix.rows; ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < real.bs_ris_matrix.cols; ++j)
            row.push_back(pair(real.bs_ris_matrix(n, j)));
        gmat.push_back(std::move(row));
    }
    auto& gvec = doc["ris_ue_vector"] = nlohmann::json::array();
    for (const auto& z : real.ris_ue_vector) gvec.push_back(pair(z));
    auto& h = doc["effective_channel"] = nlohmann::json::array();
    for (const auto& z : real.effective_channel) h.push_back(pair(z));

    write_file(output_path, doc.dump(2) + "\n");
}

namespace {

constexpr const char* kPresetCommon = R"(# common geometry: broadside arrival, pi/3 departure
[geometry]
n_bs_antennas = 32
n_ris_elements = 64
n_blocks = 32
aoa_ris_rad = 1.5707963267948966
aod_ris_rad = 1.0471975511965976
aod_bs_rad = 0.78539816339744828
rician_bs_ris = 10
rician_ris_ue = 10
)";

struct Preset {
    const char* name;
    const char* body;
};

constexpr Preset kPresets[] = {
    {"fig2-tightness", R"([power]
rotate_circuit_power_w = 0.430
unit_rotation_power_w = 0.003

[sweep]
axis = kappa
grid = 0.5 1 2 5 10 20 50
fixed_snr_db = 10
n_trials = 10000
seed = 1

[output]
path = fig2_tightness.csv
)"},
    {"fig3-se", R"([power]
rotate_circuit_power_w = 0.430
unit_rotation_power_w = 0.003

[sweep]
axis = snr_db
grid = -10 -5 0 5 10 15 20 25 30 35 40
n_trials = 10000
seed = 1

[output]
path = fig3_se.csv
)"},
    {"fig3-ee-case1", R"([power]
rotate_circuit_power_w = 0.108
unit_rotation_power_w = 0.821

[sweep]
axis = snr_db
grid = -10 -5 0 5 10 15 20 25 30 35 40
n_trials = 10000
seed = 1

[output]
path = fig3_ee_case1.csv
)"},
    {"fig3-ee-case2", R"([power]
rotate_circuit_power_w = 0.215
unit_rotation_power_w = 0.548

[sweep]
axis = snr_db
grid = -10 -5 0 5 10 15 20 25 30 35 40
n_trials = 10000
seed = 1

[output]
path = fig3_ee_case2.csv
)"},
    {"fig3-ee-case3", R"([power]
rotate_circuit_power_w = 0.430
unit_rotation_power_w = 0.003

[sweep]
axis = snr_db
grid = -10 -5 0 5 10 15 20 25 30 35 40
n_trials = 10000
seed = 1

[output]
path = fig3_ee_case3.csv
)"},
};

}  // namespace

std::string preset_config_text(const std::string& name) {
    for (const Preset& p : kPresets)
        if (name == p.name) return std::string(kPresetCommon) + "\n" + p.body;
    std::string known;
    for (const Preset& p : kPresets) known += std::string(" ") + p.name;
    throw ConfigError("unknown preset '" + name + "'; available:" + known);
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const Preset& p : kPresets) names.emplace_back(p.name);
    return names;
}

}  // namespace risim
