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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "risim/experiment.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

risim::ExperimentConfig load_experiment(const std::string& config_path,
                                        const std::string& preset) {
    if (!config_path.empty() && !preset.empty())
        throw std::runtime_error("--config and --preset are mutually exclusive");
    if (config_path.empty() && preset.empty())
        throw std::runtime_error("one of --config or --preset is required");
    const std::string text =
        preset.empty() ? read_file(config_path) : risim::preset_config_text(preset);
    return risim::parse_config(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"risim - block-controlled reflecting surface SE/EE simulator"};
    app.require_subcommand(1);

    std::string config_path, preset, output, format = "csv";
    std::uint64_t seed = 0;
    bool seed_set = false;
    long long trials = 0;
    std::uint64_t dump_trial = 0;

    CLI::App* run = app.add_subcommand("run", "run a configured sweep and write CSV");
    run->add_option("--config", config_path, "path to a config file");
    run->add_option("--preset", preset, "bundled preset name (see `risim presets`)");
    run->add_option("--seed", seed, "override the config seed")->each([&](const std::string&) {
        seed_set = true;
    });
    run->add_option("--trials", trials, "override the config trial count");
    run->add_option("--output", output, "override the config output path");
    run->add_option("--format", format, "output format (csv)");

    CLI::App* map = app.add_subcommand("feasibility-map",
                                       "scan rotation power coefficients and write CSV");
    map->add_option("--config", config_path, "path to a feasibility config file")->required();
    map->add_option("--output", output, "override the config output path");

    CLI::App* dump = app.add_subcommand("dump-channel",
                                        "sample one channel realization and write JSON");
    dump->add_option("--config", config_path, "path to a config file");
    dump->add_option("--preset", preset, "bundled preset name");
    dump->add_option("--trial", dump_trial, "trial index to sample");
    dump->add_option("--output", output, "output path")->required();

    CLI::App* presets = app.add_subcommand("presets", "list bundled presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (presets->parsed()) {
            for (const auto& name : risim::preset_names()) std::cout << name << "\n";
            return 0;
        }
        if (run->parsed()) {
            if (format != "csv")
                throw std::runtime_error("unsupported --format '" + format + "' (only csv)");
            risim::ExperimentConfig cfg = load_experiment(config_path, preset);
            if (seed_set) cfg.sweep.seed = seed;
            if (trials > 0) cfg.sweep.n_trials = static_cast<int>(trials);
            if (!output.empty()) cfg.output_path = output;
            risim::run_experiment(cfg, std::cerr);
            return 0;
        }
        if (map->parsed()) {
            risim::FeasibilityMapConfig cfg =
                risim::parse_feasibility_config(read_file(config_path));
            if (!output.empty()) cfg.output_path = output;
            risim::emit_feasibility_map(cfg, std::cerr);
            return 0;
        }
        if (dump->parsed()) {
            const risim::ExperimentConfig cfg = load_experiment(config_path, preset);
            std::cerr << "# resolved configuration\n" << risim::serialize_config(cfg);
            risim::dump_channel_realization(cfg, dump_trial, output);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
