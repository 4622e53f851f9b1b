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

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "risim/rng.hpp"

namespace risim {

using cvec = std::vector<std::complex<double>>;

/// Dense row-major complex matrix. Just enough linear algebra for the
/// cascaded-channel kernels; nothing clever.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    cvec data;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    std::complex<double>& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
        return data[r * cols + c];
    }

    void resize(std::size_t r, std::size_t c) {
        if (rows == r && cols == c) return;
        rows = r;
        cols = c;
        data.assign(r * c, {});
    }
};

/// Static description of the link: array sizes, block segmentation of the
/// reflecting surface, line-of-sight angles and Rician factors.
///
/// An n_ris_elements surface is partitioned into n_blocks rotatable blocks of
/// block_size elements each (n_ris_elements = n_blocks * block_size). Angles
/// are measured from the left end of each array, increasing clockwise, and
/// must lie in [0, pi].
struct SystemGeometry {
    int n_bs_antennas = 32;     // N_b
    int n_ris_elements = 64;    // N_s
    int n_blocks = 32;          // K
    int block_size = 2;         // M
    double aoa_ris = 0.0;       // LoS angle of arrival at the surface
    double aod_ris = 0.0;       // LoS angle of departure toward the user
    double aod_bs = 0.0;        // LoS angle of departure at the base station
    double rician_bs_ris = 0.0; // kappa_1
    double rician_ris_ue = 0.0; // kappa_2
    bool los_only = false;      // degenerate kappa -> infinity mode

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    /// Same surface re-read as element-controlled: one element per block.
    SystemGeometry element_controlled() const;
};

/// Per-block control state: a mechanical rotation angle and a common
/// reflection phase for every block.
struct RisConfiguration {
    std::vector<double> rotation_angles;   // length n_blocks, radians
    std::vector<double> reflection_phases; // length n_blocks, radians

    static RisConfiguration zeros(int n_blocks) {
        return {std::vector<double>(n_blocks, 0.0), std::vector<double>(n_blocks, 0.0)};
    }
};

/// One sampled channel pair and the cascaded effective channel built from it.
struct ChannelRealization {
    ComplexMatrix bs_ris_matrix; // G, n_ris_elements x n_bs_antennas
    cvec ris_ue_vector;          // g, length n_ris_elements
    cvec effective_channel;     // h, length n_bs_antennas, h^H = g^T diag(v) G
};

/// Precomputed line-of-sight structure for a fixed geometry and block
/// rotation vector. Sampling a realization then only draws the scattered
/// parts, which is what the Monte Carlo hot loop wants.
struct ChannelModel {
    ComplexMatrix los_bs_ris; // sqrt(k1/(k1+1)) * Gbar
    cvec los_ris_ue;          // sqrt(k2/(k2+1)) * gbar
    double nlos_scale_bs_ris = 0.0;
    double nlos_scale_ris_ue = 0.0;
    bool los_only = false;

    /// Draw one realization into preallocated storage. Draw order is fixed:
    /// all entries of G row by row, then the entries of g. Deterministic for
    /// a given generator state.
    void sample_into(rng::Xoshiro256pp& gen, ComplexMatrix& bs_ris, cvec& ris_ue) const;
};

/// Base-station array response a_b: entry m is exp(j*m*pi*cos(aod))/sqrt(n).
cvec bs_array_response(double aod, int n_antennas);

/// Rotated-block surface array response. Element m (1-based) of block k
/// (1-based) carries phase Phi_k + Theta_{k,m} with
///   Phi_k     = (k-1) * M * pi * cos(angle)
///   Theta_{k,m} = (m - (M+1)/2) * pi * cos(angle - theta_k),
/// scaled by 1/sqrt(n_ris_elements). The block rotation center sits at the
/// fractional index (M+1)/2, exactly as the phase model defines it.
cvec ris_array_response(double angle, std::span<const double> rotations,
                        const SystemGeometry& geometry);

/// Block reflection vector: element of block k equals exp(j*gamma_k).
cvec build_reflection_vector(const RisConfiguration& config, const SystemGeometry& geometry);

/// LoS structure for the given geometry and rotations.
ChannelModel make_channel_model(const SystemGeometry& geometry, std::span<const double> rotations);

struct ChannelSample {
    ComplexMatrix bs_ris; // G
    cvec ris_ue;          // g
};

/// Rician draw of (G, g). G = sqrt(k1/(k1+1))*Gbar + sqrt(1/(k1+1))*Gtilde
/// with Gbar = sqrt(N_b*N_s) a_s(aoa_ris, theta) a_b(aod_bs)^H and Gtilde
/// i.i.d. CN(0,1); g analogously from kappa_2 and a_s(aod_ris, theta).
/// In los_only mode the scattered parts are skipped entirely and no random
/// numbers are consumed.
ChannelSample sample_channels(const SystemGeometry& geometry, std::span<const double> rotations,
                              rng::Xoshiro256pp& gen);

/// h with h^H = g^T diag(v) G; length n_bs_antennas.
cvec effective_channel(const ComplexMatrix& bs_ris, const cvec& ris_ue, const cvec& reflection);

/// ||g^T diag(v) G||^2 without materializing h.
double cascaded_gain(const ComplexMatrix& bs_ris, const cvec& ris_ue, const cvec& reflection);

/// Same value, reusing caller storage for the intermediate row product.
double cascaded_gain(const ComplexMatrix& bs_ris, const cvec& ris_ue, const cvec& reflection,
                     cvec& row_workspace);

/// Bundle a sample and its cascaded channel for a given reflection vector.
ChannelRealization make_realization(ChannelSample sample, const cvec& reflection);

/// Wrap an angle to (-pi, pi].
double wrap_angle(double x);

}  // namespace risim
