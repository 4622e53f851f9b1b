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

#include "risim/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace risim {

namespace {

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

using Section = std::map<std::string, Entry>;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

/// Raw key-value scan: sections, comments, duplicate detection.
std::map<std::string, Section> scan(std::string_view text,
                                    const std::set<std::string>& known_sections) {
    std::map<std::string, Section> sections;
    std::string current;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "unterminated section header");
            current = std::string(trim(line.substr(1, line.size() - 2)));
            if (!known_sections.count(current))
                fail(line_no, "unknown section [" + current + "]");
            sections[current]; // allow empty sections
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key.empty()) fail(line_no, "empty key");
        if (current.empty()) fail(line_no, "key '" + key + "' outside any section");
        const bool inserted =
            sections[current].emplace(key, Entry{value, line_no, false}).second;
        if (!inserted) fail(line_no, "duplicate key '" + key + "' in section [" + current + "]");
    }
    return sections;
}

class Reader {
  public:
    explicit Reader(std::map<std::string, Section>& sections) : sections_(sections) {}

    bool has(const std::string& section, const std::string& key) {
        auto s = sections_.find(section);
        return s != sections_.end() && s->second.count(key) != 0;
    }

    Entry& entry(const std::string& section, const std::string& key) {
        Entry& e = sections_[section][key];
        e.used = true;
        return e;
    }

    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) {
        if (!has(section, key)) return fallback;
        return entry(section, key).value;
    }

    double get_double(const std::string& section, const std::string& key, double fallback) {
        if (!has(section, key)) return fallback;
        Entry& e = entry(section, key);
        return parse_double(e, section + "." + key);
    }

    long long get_int(const std::string& section, const std::string& key, long long fallback) {
        if (!has(section, key)) return fallback;
        Entry& e = entry(section, key);
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
        if (ec != std::errc{} || ptr != e.value.data() + e.value.size())
            fail(e.line, section + "." + key + ": expected integer, got '" + e.value + "'");
        return v;
    }

    std::uint64_t get_u64(const std::string& section, const std::string& key,
                          std::uint64_t fallback) {
        if (!has(section, key)) return fallback;
        Entry& e = entry(section, key);
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
        if (ec != std::errc{} || ptr != e.value.data() + e.value.size())
            fail(e.line, section + "." + key + ": expected unsigned integer, got '" + e.value +
                             "'");
        return v;
    }

    bool get_bool(const std::string& section, const std::string& key, bool fallback) {
        if (!has(section, key)) return fallback;
        Entry& e = entry(section, key);
        if (e.value == "true") return true;
        if (e.value == "false") return false;
        fail(e.line, section + "." + key + ": expected true or false, got '" + e.value + "'");
    }

    std::vector<double> get_grid(const std::string& section, const std::string& key) {
        Entry& e = entry(section, key);
        std::vector<double> grid;
        std::istringstream in(e.value);
        std::string token;
        while (in >> token) {
            Entry fake{token, e.line, true};
            grid.push_back(parse_double(fake, section + "." + key));
        }
        if (grid.empty()) fail(e.line, section + "." + key + ": expected at least one value");
        return grid;
    }

    /// Every present key must have been consumed by a known-key lookup.
    void reject_unknown() const {
        for (const auto& [section, entries] : sections_)
            for (const auto& [key, e] : entries)
                if (!e.used)
                    fail(e.line, "unknown key '" + key + "' in section [" + section + "]");
    }

  private:
    static double parse_double(const Entry& e, const std::string& field) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
        if (ec != std::errc{} || ptr != e.value.data() + e.value.size())
            fail(e.line, field + ": expected number, got '" + e.value + "'");
        return v;
    }

    std::map<std::string, Section>& sections_;
};

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

const char* to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::snr_db: return "snr_db";
        case SweepAxis::kappa: return "kappa";
        default: return "n_ris_elements";
    }
}

ExperimentConfig parse_config(std::string_view text) {
    auto sections = scan(text, {"geometry", "power", "sweep", "output"});
    Reader reader(sections);
    ExperimentConfig cfg;

    // [geometry]
    cfg.geometry.n_bs_antennas = static_cast<int>(reader.get_int("geometry", "n_bs_antennas", 32));
    if (!reader.has("geometry", "n_ris_elements"))
        throw ConfigError("geometry.n_ris_elements required");
    cfg.geometry.n_ris_elements =
        static_cast<int>(reader.get_int("geometry", "n_ris_elements", 0));
    if (!reader.has("geometry", "n_blocks")) throw ConfigError("geometry.n_blocks required");
    cfg.geometry.n_blocks = static_cast<int>(reader.get_int("geometry", "n_blocks", 0));
    if (cfg.geometry.n_ris_elements < 1) throw ConfigError("geometry.n_ris_elements: must be >= 1");
    if (cfg.geometry.n_blocks < 1) throw ConfigError("geometry.n_blocks: must be >= 1");
    if (cfg.geometry.n_ris_elements % cfg.geometry.n_blocks != 0)
        throw ConfigError("geometry.n_blocks (" + std::to_string(cfg.geometry.n_blocks) +
                          ") must divide n_ris_elements (" +
                          std::to_string(cfg.geometry.n_ris_elements) + ")");
    cfg.geometry.block_size = cfg.geometry.n_ris_elements / cfg.geometry.n_blocks;

    if (!reader.has("geometry", "aoa_ris_rad")) throw ConfigError("geometry.aoa_ris_rad required");
    if (!reader.has("geometry", "aod_ris_rad")) throw ConfigError("geometry.aod_ris_rad required");
    cfg.geometry.aoa_ris = reader.get_double("geometry", "aoa_ris_rad", 0.0);
    cfg.geometry.aod_ris = reader.get_double("geometry", "aod_ris_rad", 0.0);
    cfg.geometry.aod_bs = reader.get_double("geometry", "aod_bs_rad", std::numbers::pi / 4.0);
    cfg.geometry.rician_bs_ris = reader.get_double("geometry", "rician_bs_ris", 10.0);
    cfg.geometry.rician_ris_ue = reader.get_double("geometry", "rician_ris_ue", 10.0);
    cfg.geometry.los_only = reader.get_bool("geometry", "los_only", false);

    // [power]
    cfg.power.static_power = reader.get_double("power", "static_power_w", 12.0);
    cfg.power.phase_circuit_power = reader.get_double("power", "phase_circuit_power_w", 0.12);
    cfg.power.rotate_circuit_power = reader.get_double("power", "rotate_circuit_power_w", 0.0);
    cfg.power.unit_rotation_power = reader.get_double("power", "unit_rotation_power_w", 0.0);
    cfg.power.amplifier_slope = reader.get_double("power", "amplifier_slope", 1.2);
    cfg.noise_power = reader.get_double("power", "noise_power_w", 1.0);

    // [sweep]
    if (!reader.has("sweep", "axis")) throw ConfigError("sweep.axis required");
    const std::string axis = reader.get_string("sweep", "axis", "");
    if (axis == "snr_db") cfg.sweep.axis = SweepAxis::snr_db;
    else if (axis == "kappa") cfg.sweep.axis = SweepAxis::kappa;
    else if (axis == "n_ris_elements") cfg.sweep.axis = SweepAxis::n_ris_elements;
    else
        throw ConfigError("sweep.axis: expected snr_db, kappa, or n_ris_elements, got '" + axis +
                          "'");
    if (!reader.has("sweep", "grid")) throw ConfigError("sweep.grid required");
    cfg.sweep.grid = reader.get_grid("sweep", "grid");
    cfg.sweep.n_trials = static_cast<int>(reader.get_int("sweep", "n_trials", 10000));
    cfg.sweep.seed = reader.get_u64("sweep", "seed", 1);
    cfg.sweep.fixed_snr_db = reader.get_double("sweep", "fixed_snr_db", 10.0);

    // [output]
    cfg.output_path = reader.get_string("output", "path", "risim_out.csv");

    reader.reject_unknown();

    // Cross-field validation with config-level field names.
    try {
        cfg.geometry.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("geometry: ") + e.what());
    }
    try {
        cfg.power.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("power: ") + e.what());
    }
    if (!(cfg.noise_power > 0.0) || !std::isfinite(cfg.noise_power))
        throw ConfigError("power.noise_power_w: must be finite and > 0");
    if (cfg.sweep.n_trials < 2) throw ConfigError("sweep.n_trials: must be >= 2");
    if (cfg.output_path.empty()) throw ConfigError("output.path: must be nonempty");
    return cfg;
}

std::string serialize_config(const ExperimentConfig& c) {
    std::string out;
    out += "[geometry]\n";
    out += "n_bs_antennas = " + std::to_string(c.geometry.n_bs_antennas) + "\n";
    out += "n_ris_elements = " + std::to_string(c.geometry.n_ris_elements) + "\n";
    out += "n_blocks = " + std::to_string(c.geometry.n_blocks) + "\n";
    out += "aoa_ris_rad = " + fmt_double(c.geometry.aoa_ris) + "\n";
    out += "aod_ris_rad = " + fmt_double(c.geometry.aod_ris) + "\n";
    out += "aod_bs_rad = " + fmt_double(c.geometry.aod_bs) + "\n";
    out += "rician_bs_ris = " + fmt_double(c.geometry.rician_bs_ris) + "\n";
    out += "rician_ris_ue = " + fmt_double(c.geometry.rician_ris_ue) + "\n";
    out += std::string("los_only = ") + (c.geometry.los_only ? "true" : "false") + "\n";
    out += "\n[power]\n";
    out += "static_power_w = " + fmt_double(c.power.static_power) + "\n";
    out += "phase_circuit_power_w = " + fmt_double(c.power.phase_circuit_power) + "\n";
    out += "rotate_circuit_power_w = " + fmt_double(c.power.rotate_circuit_power) + "\n";
    out += "unit_rotation_power_w = " + fmt_double(c.power.unit_rotation_power) + "\n";
    out += "amplifier_slope = " + fmt_double(c.power.amplifier_slope) + "\n";
    out += "noise_power_w = " + fmt_double(c.noise_power) + "\n";
    out += "\n[sweep]\n";
    out += std::string("axis = ") + to_string(c.sweep.axis) + "\n";
    out += "grid =";
    for (const double v : c.sweep.grid) out += " " + fmt_double(v);
    out += "\n";
    out += "n_trials = " + std::to_string(c.sweep.n_trials) + "\n";
    out += "seed = " + std::to_string(c.sweep.seed) + "\n";
    out += "fixed_snr_db = " + fmt_double(c.sweep.fixed_snr_db) + "\n";
    out += "\n[output]\n";
    out += "path = " + c.output_path + "\n";
    return out;
}

FeasibilityMapConfig parse_feasibility_config(std::string_view text) {
    auto sections = scan(text, {"feasibility", "output"});
    Reader reader(sections);
    FeasibilityMapConfig cfg;
    cfg.p1 = reader.get_double("feasibility", "p1_w", cfg.p1);
    cfg.n_ris_elements =
        static_cast<int>(reader.get_int("feasibility", "n_ris_elements", cfg.n_ris_elements));
    cfg.p2_min = reader.get_double("feasibility", "p2_min", cfg.p2_min);
    cfg.p2_max = reader.get_double("feasibility", "p2_max", cfg.p2_max);
    cfg.p2_points = static_cast<int>(reader.get_int("feasibility", "p2_points", cfg.p2_points));
    cfg.p_unit_min = reader.get_double("feasibility", "p_unit_min", cfg.p_unit_min);
    cfg.p_unit_max = reader.get_double("feasibility", "p_unit_max", cfg.p_unit_max);
    cfg.p_unit_points =
        static_cast<int>(reader.get_int("feasibility", "p_unit_points", cfg.p_unit_points));
    cfg.output_path = reader.get_string("output", "path", cfg.output_path);
    reader.reject_unknown();

    if (cfg.n_ris_elements < 1) throw ConfigError("feasibility.n_ris_elements: must be >= 1");
    if (cfg.p2_points < 1 || cfg.p_unit_points < 1)
        throw ConfigError("feasibility: grid point counts must be >= 1");
    if (!(cfg.p1 >= 0.0) || !(cfg.p2_min >= 0.0) || !(cfg.p_unit_min >= 0.0))
        throw ConfigError("feasibility: powers must be >= 0");
    if (cfg.p2_max < cfg.p2_min || cfg.p_unit_max < cfg.p_unit_min)
        throw ConfigError("feasibility: grid max must be >= min");
    return cfg;
}

std::string serialize_feasibility_config(const FeasibilityMapConfig& c) {
    std::string out;
    out += "[feasibility]\n";
    out += "p1_w = " + fmt_double(c.p1) + "\n";
    out += "n_ris_elements = " + std::to_string(c.n_ris_elements) + "\n";
    out += "p2_min = " + fmt_double(c.p2_min) + "\n";
    out += "p2_max = " + fmt_double(c.p2_max) + "\n";
    out += "p2_points = " + std::to_string(c.p2_points) + "\n";
    out += "p_unit_min = " + fmt_double(c.p_unit_min) + "\n";
    out += "p_unit_max = " + fmt_double(c.p_unit_max) + "\n";
    out += "p_unit_points = " + std::to_string(c.p_unit_points) + "\n";
    out += "\n[output]\n";
    out += "path = " + c.output_path + "\n";
    return out;
}

}  // namespace risim
