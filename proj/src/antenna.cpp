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

#include "mmwsim/antenna.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mmwsim
{

namespace
{

// (1/n) sum_{k<n} exp(-j k x)
cd dirichlet_mean(int n, double x)
{
    const cd step = std::polar(1.0, -x);
    cd term = 1.0;
    cd sum = 0.0;
    for (int k = 0; k < n; ++k)
    {
        sum += term;
        term *= step;
    }
    return sum / static_cast<double>(n);
}

} // namespace

UpaGeometry UpaGeometry::from_count(int n, double spacing)
{
    if (n < 1 || !std::has_single_bit(static_cast<unsigned>(n)))
        throw std::invalid_argument("UPA element count must be a power of two, got " + std::to_string(n));
    const int log2n = std::countr_zero(static_cast<unsigned>(n));
    const int rows = 1 << (log2n / 2);
    return UpaGeometry{rows, n / rows, spacing};
}

AxisProjection AxisProjection::of(const Direction &dir)
{
    return {std::sin(dir.elevation), std::cos(dir.elevation) * std::sin(dir.azimuth)};
}

Eigen::VectorXcd array_response(const UpaGeometry &g, const Direction &dir)
{
    const AxisProjection p = AxisProjection::of(dir);
    const double k = -2.0 * std::numbers::pi * g.spacing;
    Eigen::VectorXcd u(g.size());
    for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.cols; ++c)
            u(r * g.cols + c) = std::polar(1.0, k * (r * p.vertical + c * p.horizontal));
    return u;
}

BeamVector steering_vector(const UpaGeometry &g, const Direction &dir)
{
    return {array_response(g, dir) / std::sqrt(static_cast<double>(g.size()))};
}

BeamVector receive_vector(const UpaGeometry &g, const Direction &dir)
{
    return {steering_vector(g, dir).coefficients.conjugate()};
}

double beamforming_gain(const Eigen::MatrixXcd &H, const BeamVector &w_tx, const BeamVector &w_rx)
{
    if (H.rows() != w_rx.size() || H.cols() != w_tx.size())
        throw std::invalid_argument("beamforming_gain: channel is " + std::to_string(H.rows()) + "x" +
                                    std::to_string(H.cols()) + " but beams are rx " + std::to_string(w_rx.size()) +
                                    ", tx " + std::to_string(w_tx.size()));
    const cd y = w_rx.coefficients.transpose() * H * w_tx.coefficients;
    return std::norm(y);
}

double max_aligned_gain_db(int n_tx, int n_rx)
{
    if (n_tx < 1 || n_rx < 1)
        throw std::invalid_argument("max_aligned_gain_db: antenna counts must be >= 1");
    return 10.0 * std::log10(static_cast<double>(n_tx) * static_cast<double>(n_rx));
}

std::pair<std::size_t, std::size_t> strongest_path(const ClusterSet &set)
{
    if (set.num_subpaths() == 0)
        throw std::invalid_argument("strongest_path: empty cluster set");
    std::pair<std::size_t, std::size_t> best{0, 0};
    double best_power = -1.0;
    for (std::size_t k = 0; k < set.clusters.size(); ++k)
        for (std::size_t l = 0; l < set.clusters[k].subpaths.size(); ++l)
            if (set.clusters[k].subpaths[l].power_fraction > best_power)
            {
                best_power = set.clusters[k].subpaths[l].power_fraction;
                best = {k, l};
            }
    return best;
}

BeamPair align_to_strongest_path(const ClusterSet &clusters, const UpaGeometry &tx_geometry,
                                 const UpaGeometry &rx_geometry)
{
    const auto [k, l] = strongest_path(clusters);
    const SubPath &p = clusters.clusters[k].subpaths[l];
    return {steering_vector(tx_geometry, p.departure), receive_vector(rx_geometry, p.arrival)};
}

cd steering_correlation(const UpaGeometry &g, const AxisProjection &a, const AxisProjection &b)
{
    const double k = 2.0 * std::numbers::pi * g.spacing;
    return dirichlet_mean(g.rows, k * (b.vertical - a.vertical)) *
           dirichlet_mean(g.cols, k * (b.horizontal - a.horizontal));
}

} // namespace mmwsim
