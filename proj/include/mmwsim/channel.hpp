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

#include "mmwsim/antenna.hpp"
#include "mmwsim/config.hpp"
#include "mmwsim/paths.hpp"
#include "mmwsim/rng.hpp"

#include <Eigen/Core>
#include <array>
#include <limits>
#include <vector>

namespace mmwsim
{

enum class LinkState
{
    LoS,
    NLoS,
    Outage
};

// Pathloss of a link in outage. Received power through it is exactly zero.
inline constexpr double outage_pathloss_db = std::numeric_limits<double>::infinity();

struct StateProbabilities
{
    double outage = 0.0;
    double los = 0.0;
    double nlos = 0.0;
};

// Distance-dependent blockage model:
//   p_out  = max(0, 1 - exp(-a_out d + b_out))
//   p_los  = (1 - p_out) exp(-a_los d)
//   p_nlos = 1 - p_out - p_los
StateProbabilities state_probabilities(double distance, const BlockageParams &params);

LinkState draw_link_state(double distance, RandomStream &rng, const BlockageParams &params);

// alpha + beta 10 log10(d) for the band and state, without shadowing.
double mean_pathloss_db(double distance, LinkState state, const BandConfig &band);

// Mean pathloss plus log-normal shadowing xi ~ N(0, sigma^2). Throws
// std::invalid_argument for Outage; callers use outage_pathloss_db instead.
double pathloss_db(double distance, LinkState state, const BandConfig &band, RandomStream &rng);

// Cluster/sub-path draw for one link on one band:
//   K = max(1, Poisson(cluster_mean)), L_k ~ U{1..10}
//   P'_kl = U_k^(r_tau - 1) 10^(-0.1 Z_k + V_kl) / L_k,  U_k ~ U(0,1], V_kl ~ U[0,0.6], Z_k ~ N(0, zeta^2)
//   P_kl  = P'_kl / sum P'
// Cluster centers: azimuth ~ U[0, 2pi), elevation ~ U[-max, max]; sub-paths
// add independent N(0, spread^2) offsets to each of the four angles. The
// small-scale phase is U[0, 2pi).
//
// With angles.geometric_anchor set and a bearing given, the first cluster's
// central azimuths are the geometric bearings instead of random ones.
struct LinkBearing
{
    double departure_azimuth = 0.0; // from the BS towards the UE
    double arrival_azimuth = 0.0;   // from the UE towards the BS
};
LinkBearing bearing(double bs_x, double bs_y, double ue_x, double ue_y);

ClusterSet sample_clusters(const BandConfig &band, const AngleParams &angles, RandomStream &rng,
                           const LinkBearing *anchor = nullptr);

// H = sum_k sum_l sqrt(P_kl) e^{j phase_kl} u_rx(AoA_kl) u_tx(AoD_kl)^H with
// unit-modulus array responses; n_rx x n_tx.
Eigen::MatrixXcd channel_matrix(const ClusterSet &clusters, const UpaGeometry &tx_geometry,
                                const UpaGeometry &rx_geometry);

// One link on one band.
struct LinkChannel
{
    LinkState state = LinkState::Outage;
    double pathloss_db = outage_pathloss_db;
    ClusterSet clusters;
};

// A BS-UE link on both bands. The blockage state is drawn once and shared;
// shadowing and clusters are independent per band.
struct DualBandLink
{
    LinkState state = LinkState::Outage;
    std::array<double, 2> pathloss_db{outage_pathloss_db, outage_pathloss_db};
    std::array<ClusterSet, 2> clusters;

    bool in_outage() const { return state == LinkState::Outage; }
    LinkChannel band(Carrier c) const { return {state, pathloss_db[index_of(c)], clusters[index_of(c)]}; }
};

// Draws state, then per-band pathloss, then (if requested and not in outage)
// per-band clusters.
DualBandLink draw_link(double distance, const ScenarioConfig &config, RandomStream &rng, bool with_clusters,
                       const LinkBearing *anchor = nullptr);

// Sub-path reduced for repeated gain evaluation.
struct PathTerm
{
    cd amplitude; // sqrt(P) e^{j phase}
    AxisProjection arrival;
    AxisProjection departure;
};

std::vector<PathTerm> compile_paths(const ClusterSet &clusters);

// |w_rx^T H w_tx|^2 for H = channel_matrix(clusters) and steered beams
// w_tx = steering_vector(tx_beam), w_rx = receive_vector(rx_beam), evaluated
// in factored form. Matches beamforming_gain(channel_matrix(...), ...).
double steered_gain(const std::vector<PathTerm> &paths, const UpaGeometry &tx_geometry,
                    const UpaGeometry &rx_geometry, const AxisProjection &tx_beam, const AxisProjection &rx_beam);

} // namespace mmwsim
