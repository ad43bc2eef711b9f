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

#include "mmwsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmwsim
{

namespace
{

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double deg = std::numbers::pi / 180.0;

// Pathloss is evaluated no closer than the 1 m reference distance.
constexpr double min_link_distance = 1.0;

} // namespace

StateProbabilities state_probabilities(double distance, const BlockageParams &params)
{
    StateProbabilities p;
    p.outage = std::max(0.0, 1.0 - std::exp(-params.a_out * distance + params.b_out));
    p.los = (1.0 - p.outage) * std::exp(-params.a_los * distance);
    p.nlos = 1.0 - p.outage - p.los;
    return p;
}

LinkState draw_link_state(double distance, RandomStream &rng, const BlockageParams &params)
{
    const StateProbabilities p = state_probabilities(distance, params);
    const double u = uniform01(rng);
    if (u < p.outage)
        return LinkState::Outage;
    if (u < p.outage + p.los)
        return LinkState::LoS;
    return LinkState::NLoS;
}

double mean_pathloss_db(double distance, LinkState state, const BandConfig &band)
{
    if (state == LinkState::Outage)
        throw std::invalid_argument("mean_pathloss_db: link in outage has no finite pathloss");
    if (!(distance > 0.0))
        throw std::invalid_argument("mean_pathloss_db: distance must be > 0");
    const PathlossParams &pl = band.pathloss;
    const bool los = state == LinkState::LoS;
    const double alpha = los ? pl.alpha_los : pl.alpha_nlos;
    const double beta = los ? pl.beta_los : pl.beta_nlos;
    return alpha + beta * 10.0 * std::log10(distance);
}

double pathloss_db(double distance, LinkState state, const BandConfig &band, RandomStream &rng)
{
    const double mean = mean_pathloss_db(distance, state, band);
    const double sigma = state == LinkState::LoS ? band.pathloss.sigma_los : band.pathloss.sigma_nlos;
    return mean + gaussian(rng, 0.0, sigma);
}

LinkBearing bearing(double bs_x, double bs_y, double ue_x, double ue_y)
{
    auto wrap = [](double a) { return a < 0.0 ? a + two_pi : a; };
    return {wrap(std::atan2(ue_y - bs_y, ue_x - bs_x)), wrap(std::atan2(bs_y - ue_y, bs_x - ue_x))};
}

ClusterSet sample_clusters(const BandConfig &band, const AngleParams &angles, RandomStream &rng,
                           const LinkBearing *anchor)
{
    const auto num_clusters = std::max<std::uint64_t>(1, poisson(rng, band.cluster_mean));
    const double spread = angles.subpath_spread_deg * deg;
    const double el_max = angles.elevation_max_deg * deg;

    ClusterSet set;
    set.clusters.resize(num_clusters);
    double total = 0.0;
    for (std::size_t k = 0; k < set.clusters.size(); ++k)
    {
        Cluster &cluster = set.clusters[k];
        const int num_subpaths = std::uniform_int_distribution<int>(1, 10)(rng);
        const double u = 1.0 - uniform01(rng); // (0, 1]
        const double z = gaussian(rng, 0.0, band.zeta);
        Direction arrival{uniform(rng, 0.0, two_pi), uniform(rng, -el_max, el_max)};
        Direction departure{uniform(rng, 0.0, two_pi), uniform(rng, -el_max, el_max)};
        if (k == 0 && anchor && angles.geometric_anchor)
        {
            arrival.azimuth = anchor->arrival_azimuth;
            departure.azimuth = anchor->departure_azimuth;
        }
        const double cluster_scale = std::pow(u, band.r_tau - 1.0) / num_subpaths;

        cluster.subpaths.resize(num_subpaths);
        for (auto &sp : cluster.subpaths)
        {
            const double v = uniform(rng, 0.0, 0.6);
            sp.power_fraction = cluster_scale * std::pow(10.0, -0.1 * z + v);
            sp.arrival = {arrival.azimuth + gaussian(rng, 0.0, spread), arrival.elevation + gaussian(rng, 0.0, spread)};
            sp.departure = {departure.azimuth + gaussian(rng, 0.0, spread),
                            departure.elevation + gaussian(rng, 0.0, spread)};
            sp.phase = uniform(rng, 0.0, two_pi);
            total += sp.power_fraction;
        }
    }
    for (auto &cluster : set.clusters)
        for (auto &sp : cluster.subpaths)
            sp.power_fraction /= total;
    return set;
}

Eigen::MatrixXcd channel_matrix(const ClusterSet &clusters, const UpaGeometry &tx_geometry,
                                const UpaGeometry &rx_geometry)
{
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(rx_geometry.size(), tx_geometry.size());
    for (const auto &cluster : clusters.clusters)
        for (const auto &sp : cluster.subpaths)
        {
            const cd g = std::polar(std::sqrt(sp.power_fraction), sp.phase);
            H.noalias() += g * array_response(rx_geometry, sp.arrival) * array_response(tx_geometry, sp.departure).adjoint();
        }
    return H;
}

DualBandLink draw_link(double distance, const ScenarioConfig &config, RandomStream &rng, bool with_clusters,
                       const LinkBearing *anchor)
{
    DualBandLink link;
    link.state = draw_link_state(distance, rng, config.blockage);
    if (link.in_outage())
        return link;
    const double d = std::max(distance, min_link_distance);
    for (Carrier c : all_carriers)
        link.pathloss_db[index_of(c)] = pathloss_db(d, link.state, config.band(c), rng);
    if (with_clusters)
        for (Carrier c : all_carriers)
            link.clusters[index_of(c)] = sample_clusters(config.band(c), config.angles, rng, anchor);
    return link;
}

std::vector<PathTerm> compile_paths(const ClusterSet &clusters)
{
    std::vector<PathTerm> terms;
    terms.reserve(clusters.num_subpaths());
    for (const auto &cluster : clusters.clusters)
        for (const auto &sp : cluster.subpaths)
            terms.push_back({std::polar(std::sqrt(sp.power_fraction), sp.phase), AxisProjection::of(sp.arrival),
                             AxisProjection::of(sp.departure)});
    return terms;
}

double steered_gain(const std::vector<PathTerm> &paths, const UpaGeometry &tx_geometry,
                    const UpaGeometry &rx_geometry, const AxisProjection &tx_beam, const AxisProjection &rx_beam)
{
    // w_rx^T u_rx(aoa) = sqrt(n_rx) s(rx_beam)^H s(aoa); u_tx(aod)^H w_tx = sqrt(n_tx) s(aod)^H s(tx_beam)
    cd y = 0.0;
    for (const auto &p : paths)
        y += p.amplitude * steering_correlation(rx_geometry, rx_beam, p.arrival) *
             steering_correlation(tx_geometry, p.departure, tx_beam);
    return static_cast<double>(tx_geometry.size()) * static_cast<double>(rx_geometry.size()) * std::norm(y);
}

} // namespace mmwsim
