// SPDX-License-Identifier: Apache-2.0
//
// mmwsim: multi-operator mmWave spectrum access simulator
// Copyright (C) 2026 The mmwsim authors
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

#include "mmwsim/paths.hpp"

#include <Eigen/Core>
#include <complex>
#include <utility>

namespace mmwsim
{

using cd = std::complex<double>;

// Uniform planar array of rows x cols elements, spacing in wavelengths.
//
// Axis convention: rows run along the vertical axis, columns along the
// horizontal one. Element (r, c) of the array response towards (az, el) has
// phase -2 pi spacing (r sin(el) + c cos(el) sin(az)); element index is
// r * cols + c. Broadside is az = 0, el = 0.
struct UpaGeometry
{
    int rows = 1;
    int cols = 1;
    double spacing = 0.5;

    int size() const { return rows * cols; }

    // Factorizes a power-of-two element count into the most square grid,
    // rows <= cols (64 -> 8x8, 32 -> 4x8). Throws std::invalid_argument
    // for counts that are not powers of two.
    static UpaGeometry from_count(int n, double spacing = 0.5);

    bool operator==(const UpaGeometry &) const = default;
};

// Unit-norm beamforming weights.
struct BeamVector
{
    Eigen::VectorXcd coefficients;

    Eigen::Index size() const { return coefficients.size(); }
};

struct BeamPair
{
    BeamVector tx;
    BeamVector rx;
};

// Unit-modulus array response (norm sqrt(n)); the spatial signature used in
// channel matrices.
Eigen::VectorXcd array_response(const UpaGeometry &geometry, const Direction &dir);

// 1/sqrt(n)-normalized array response; transmit beam steered towards dir.
BeamVector steering_vector(const UpaGeometry &geometry, const Direction &dir);

// Receive beam towards dir. The gain formula applies a plain transpose to the
// receive weights, so they are stored conjugated: w_rx^T u(dir) = sqrt(n).
BeamVector receive_vector(const UpaGeometry &geometry, const Direction &dir);

// |w_rx^T H w_tx|^2. H must be w_rx.size() x w_tx.size().
double beamforming_gain(const Eigen::MatrixXcd &H, const BeamVector &w_tx, const BeamVector &w_rx);

// 10 log10(n_tx n_rx): the gain of perfectly aligned beams on a single path.
double max_aligned_gain_db(int n_tx, int n_rx);

// Index of the sub-path carrying the largest power fraction, as
// (cluster, sub-path). Ties resolve to the lowest index pair.
std::pair<std::size_t, std::size_t> strongest_path(const ClusterSet &clusters);

// Steers the BS beam at the AoD and the UE beam at the AoA of the strongest
// sub-path.
BeamPair align_to_strongest_path(const ClusterSet &clusters, const UpaGeometry &tx_geometry,
                                 const UpaGeometry &rx_geometry);

// Projections of a direction on the two array axes: (sin(el), cos(el) sin(az)).
struct AxisProjection
{
    double vertical = 0.0;
    double horizontal = 0.0;

    static AxisProjection of(const Direction &dir);
};

// s(a)^H s(b) for unit-norm steering vectors, computed without forming the
// vectors (the UPA response is separable over rows and columns).
cd steering_correlation(const UpaGeometry &geometry, const AxisProjection &a, const AxisProjection &b);

} // namespace mmwsim
