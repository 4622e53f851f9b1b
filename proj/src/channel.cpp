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

#include "risim/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risim {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

double wrap_angle(double x) {
    return x - 2.0 * kPi * std::ceil((x - kPi) / (2.0 * kPi));
}

void SystemGeometry::validate() const {
    require(n_bs_antennas >= 1, "n_bs_antennas: must be >= 1");
    require(n_ris_elements >= 1, "n_ris_elements: must be >= 1");
    require(n_blocks >= 1, "n_blocks: must be >= 1");
    require(block_size >= 1, "block_size: must be >= 1");
    require(n_ris_elements == n_blocks * block_size,
            "n_ris_elements: must equal n_blocks * block_size");
    for (auto [name, a] : {std::pair{"aoa_ris", aoa_ris}, {"aod_ris", aod_ris},
                           {"aod_bs", aod_bs}}) {
        require(std::isfinite(a), std::string(name) + ": must be finite");
        require(a >= 0.0 && a <= kPi, std::string(name) + ": must lie in [0, pi]");
    }
    require(std::isfinite(rician_bs_ris) && rician_bs_ris >= 0.0,
            "rician_bs_ris: must be finite and >= 0");
    require(std::isfinite(rician_ris_ue) && rician_ris_ue >= 0.0,
            "rician_ris_ue: must be finite and >= 0");
}

SystemGeometry SystemGeometry::element_controlled() const {
    SystemGeometry g = *this;
    g.n_blocks = n_ris_elements;
    g.block_size = 1;
    return g;
}

cvec bs_array_response(double aod, int n_antennas) {
    require(n_antennas >= 1, "n_antennas: must be >= 1");
    require(std::isfinite(aod), "aod: must be finite");
    const double step = kPi * std::cos(aod);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_antennas));
    cvec a(n_antennas);
    for (int m = 0; m < n_antennas; ++m) a[m] = std::polar(scale, m * step);
    return a;
}

cvec ris_array_response(double angle, std::span<const double> rotations,
                        const SystemGeometry& geometry) {
    geometry.validate();
    require(std::isfinite(angle), "angle: must be finite");
    require(static_cast<int>(rotations.size()) == geometry.n_blocks,
            "rotations: expected length " + std::to_string(geometry.n_blocks) + ", got " +
                std::to_string(rotations.size()));

    const int n_blocks = geometry.n_blocks;
    const int block = geometry.block_size;
    const double scale = 1.0 / std::sqrt(static_cast<double>(geometry.n_ris_elements));
    const double center = (block + 1) / 2.0;

    cvec a(geometry.n_ris_elements);
    for (int k = 1; k <= n_blocks; ++k) {
        const double global = (k - 1) * block * kPi * std::cos(angle);
        const double local_step = kPi * std::cos(angle - rotations[k - 1]);
        for (int m = 1; m <= block; ++m) {
            a[(k - 1) * block + (m - 1)] = std::polar(scale, global + (m - center) * local_step);
        }
    }
    return a;
}

cvec build_reflection_vector(const RisConfiguration& config, const SystemGeometry& geometry) {
    geometry.validate();
    require(static_cast<int>(config.reflection_phases.size()) == geometry.n_blocks,
            "reflection_phases: expected length " + std::to_string(geometry.n_blocks) + ", got " +
                std::to_string(config.reflection_phases.size()));
    require(static_cast<int>(config.rotation_angles.size()) == geometry.n_blocks,
            "rotation_angles: expected length " + std::to_string(geometry.n_blocks) + ", got " +
                std::to_string(config.rotation_angles.size()));

    cvec v(geometry.n_ris_elements);
    for (int k = 0; k < geometry.n_blocks; ++k) {
        const std::complex<double> phase = std::polar(1.0, config.reflection_phases[k]);
        for (int m = 0; m < geometry.block_size; ++m) v[k * geometry.block_size + m] = phase;
    }
    return v;
}

ChannelModel make_channel_model(const SystemGeometry& geometry,
                                std::span<const double> rotations) {
    geometry.validate();
    const cvec a_arrival = ris_array_response(geometry.aoa_ris, rotations, geometry);
    const cvec a_departure = ris_array_response(geometry.aod_ris, rotations, geometry);
    const cvec a_bs = bs_array_response(geometry.aod_bs, geometry.n_bs_antennas);

    const double k1 = geometry.rician_bs_ris;
    const double k2 = geometry.rician_ris_ue;
    const double los_g = geometry.los_only ? 1.0 : std::sqrt(k1 / (k1 + 1.0));
    const double los_gvec = geometry.los_only ? 1.0 : std::sqrt(k2 / (k2 + 1.0));

    ChannelModel model;
    model.los_only = geometry.los_only;
    model.nlos_scale_bs_ris = geometry.los_only ? 0.0 : std::sqrt(1.0 / (k1 + 1.0));
    model.nlos_scale_ris_ue = geometry.los_only ? 0.0 : std::sqrt(1.0 / (k2 + 1.0));

    const double amp_g =
        los_g * std::sqrt(static_cast<double>(geometry.n_bs_antennas) * geometry.n_ris_elements);
    model.los_bs_ris.resize(geometry.n_ris_elements, geometry.n_bs_antennas);
    for (int n = 0; n < geometry.n_ris_elements; ++n)
        for (int j = 0; j < geometry.n_bs_antennas; ++j)
            model.los_bs_ris(n, j) = amp_g * a_arrival[n] * std::conj(a_bs[j]);

    const double amp_gvec = los_gvec * std::sqrt(static_cast<double>(geometry.n_ris_elements));
    model.los_ris_ue.resize(geometry.n_ris_elements);
    for (int n = 0; n < geometry.n_ris_elements; ++n)
        model.los_ris_ue[n] = amp_gvec * a_departure[n];

    return model;
}

void ChannelModel::sample_into(rng::Xoshiro256pp& gen, ComplexMatrix& bs_ris,
                               cvec& ris_ue) const {
    bs_ris.resize(los_bs_ris.rows, los_bs_ris.cols);
    ris_ue.resize(los_ris_ue.size());
    if (los_only) {
        bs_ris.data = los_bs_ris.data;
        ris_ue = los_ris_ue;
        return;
    }
    for (std::size_t i = 0; i < los_bs_ris.data.size(); ++i)
        bs_ris.data[i] = los_bs_ris.data[i] + nlos_scale_bs_ris * gen.cnormal();
    for (std::size_t n = 0; n < los_ris_ue.size(); ++n)
        ris_ue[n] = los_ris_ue[n] + nlos_scale_ris_ue * gen.cnormal();
}

ChannelSample sample_channels(const SystemGeometry& geometry, std::span<const double> rotations,
                              rng::Xoshiro256pp& gen) {
    const ChannelModel model = make_channel_model(geometry, rotations);
    ChannelSample sample;
    model.sample_into(gen, sample.bs_ris, sample.ris_ue);
    return sample;
}

namespace {

/// row = g^T diag(v) G (the conjugate transpose of the effective channel).
void cascaded_row(const ComplexMatrix& bs_ris, const cvec& ris_ue, const cvec& reflection,
                  cvec& row) {
    require(bs_ris.rows == ris_ue.size(),
            "bs_ris: row count must match ris_ue length");
    require(bs_ris.rows == reflection.size(),
            "reflection: expected length " + std::to_string(bs_ris.rows) + ", got " +
                std::to_string(reflection.size()));
    row.assign(bs_ris.cols, {});
    for (std::size_t n = 0; n < bs_ris.rows; ++n) {
        const std::complex<double> t = ris_ue[n] * reflection[n];
        const std::complex<double>* gr = &bs_ris.data[n * bs_ris.cols];
        for (std::size_t j = 0; j < bs_ris.cols; ++j) row[j] += t * gr[j];
    }
}

}  // namespace

cvec effective_channel(const ComplexMatrix& bs_ris, const cvec& ris_ue, const cvec& reflection) {
    cvec row;
    cascaded_row(bs_ris, ris_ue, reflection, row);
    for (auto& x : row) x = std::conj(x);
    return row;
}

double cascaded_gain(const ComplexMatrix& bs_ris, const cvec& ris_ue, const cvec& reflection,
                     cvec& row_workspace) {
    cascaded_row(bs_ris, ris_ue, reflection, row_workspace);
    double sum = 0.0;
    for (const auto& x : row_workspace) sum += std::norm(x);
    return sum;
}

double cascaded_gain(const ComplexMatrix& bs_ris, const cvec& ris_ue, const cvec& reflection) {
    cvec row;
    return cascaded_gain(bs_ris, ris_ue, reflection, row);
}

ChannelRealization make_realization(ChannelSample sample, const cvec& reflection) {
    ChannelRealization real;
    real.effective_channel = effective_channel(sample.bs_ris, sample.ris_ue, reflection);
    real.bs_ris_matrix = std::move(sample.bs_ris);
    real.ris_ue_vector = std::move(sample.ris_ue);
    return real;
}

}  // namespace risim
