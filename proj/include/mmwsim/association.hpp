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
#include "mmwsim/channel.hpp"
#include "mmwsim/config.hpp"
#include "mmwsim/deployment.hpp"
#include "mmwsim/rng.hpp"

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace mmwsim
{

// A base station, identified by operator and index within that operator.
struct BsRef
{
    int op = 0;
    int index = 0;

    auto operator<=>(const BsRef &) const = default;
};

// Background (phase-1) links of one operator: every (UE, BS) pair of the
// operator, row-major by UE. Clusters are not drawn for these links.
struct OperatorLinks
{
    std::size_t num_users = 0;
    std::size_t num_bs = 0;
    std::vector<DualBandLink> links;

    const DualBandLink &at(std::size_t ue, std::size_t bs) const { return links[ue * num_bs + bs]; }
};
using BackgroundLinks = std::vector<OperatorLinks>;

// For each operator, UE by UE, BS by BS: one state draw shared by both bands,
// then the per-band pathloss.
BackgroundLinks draw_background_links(const Deployment &deployment, const ScenarioConfig &config, RandomStream &rng);

struct OperatorAssociation
{
    std::vector<std::optional<int>> serving_bs;   // per UE; empty if in outage to every BS
    std::vector<std::optional<Carrier>> carrier;  // per UE; set by random_band_assignment
    std::vector<std::array<int, 2>> load;         // per BS, per carrier: associated UE count
};

struct AssociationTable
{
    std::vector<OperatorAssociation> operators;

    int load(const BsRef &bs, Carrier c) const { return operators[bs.op].load[bs.index][index_of(c)]; }
    std::size_t associated_users() const;
    std::size_t total_load() const;
};

// Each UE picks the own-operator BS of minimum pathloss under the rule
// (default: 28 GHz realization). Ties go to the lowest BS index. UEs in outage
// to every own-operator BS stay unassociated. Loads are left at zero.
AssociationTable min_pathloss_association(const Deployment &deployment, const BackgroundLinks &links,
                                          AssociationRule rule = AssociationRule::Band28);

// Every associated UE goes to 28 GHz with probability p28, else 73 GHz, and is
// counted in the load of its (BS, carrier).
AssociationTable random_band_assignment(AssociationTable table, double p28, RandomStream &rng);

// Transmit direction of every BS on each carrier while it serves its own
// users: towards the strongest path of one uniformly chosen UE it serves on
// that carrier, or a uniformly random direction if it serves none.
using InterfererBeams = std::vector<std::vector<std::array<Direction, 2>>>;
InterfererBeams draw_interferer_beams(const Deployment &deployment, const AssociationTable &table,
                                      const ScenarioConfig &config, RandomStream &rng);

// Links from every BS of every operator to the reference UE, with clusters.
using ReferenceLinks = std::vector<std::vector<DualBandLink>>;
ReferenceLinks draw_reference_links(const Deployment &deployment, const ScenarioConfig &config, RandomStream &rng);

// Licensing and per-operator usable bandwidth of each carrier.
struct RegimeSpec
{
    std::array<Licensing, 2> licensing{Licensing::Exclusive, Licensing::Pooled};
    std::array<double, 2> bandwidth_hz{0.0, 0.0};

    Licensing licensing_of(Carrier c) const { return licensing[index_of(c)]; }
    double bandwidth(Carrier c) const { return bandwidth_hz[index_of(c)]; }
};

// Exclusive: total / M per operator. Pooled: the full band.
RegimeSpec make_regime(Regime regime, const ScenarioConfig &config);
// Same, using the licensing declared in the config's bands.
RegimeSpec regime_from_config(const ScenarioConfig &config);

// Exclusive carrier: the serving operator's other BSs. Pooled carrier: every
// other BS of every operator. Ordered by (operator, index).
std::vector<BsRef> interferer_set(const RegimeSpec &regime, Carrier carrier, const BsRef &serving,
                                  const Deployment &deployment);

// One transmitter as seen by the receiver.
struct SignalTerm
{
    double tx_power_dbm = 0.0;
    double pathloss_db = 0.0; // outage_pathloss_db contributes nothing
    double gain = 0.0;        // linear beamforming gain
};

double received_power_mw(const SignalTerm &term);
double noise_power_mw(double bandwidth_hz, double noise_psd_dbm_hz, double noise_figure_db);

// (P/PL) G of the serving term over the interferers' sum plus noise.
double sinr(const SignalTerm &serving, std::span<const SignalTerm> interferers, double noise_mw);

// Round-robin share of a full-buffer user: bw / (1 + n_loaded) log2(1 + sinr).
double throughput(double bandwidth_hz, int n_loaded, double sinr_linear);

// A (BS, carrier) option for the reference UE.
struct Candidate
{
    int bs = 0; // index within the reference operator
    Carrier carrier = Carrier::Band28;
    double sinr = 0.0;
    int load = 0;
    double bandwidth_hz = 0.0;
    double rate = 0.0;
};

struct Selection
{
    std::optional<int> bs;
    std::optional<Carrier> carrier;
    double rate = 0.0;
    double sinr = 0.0;
    int load = 0;
    double bandwidth_hz = 0.0;

    bool assigned() const { return bs.has_value(); }
};

// Highest rate; ties go to the lower carrier, then the lower BS index.
// Empty input gives an unassigned selection with rate 0.
Selection best_carrier_bs(std::span<const Candidate> candidates);

// Everything the reference UE needs to rank its options in one iteration.
struct ReferenceScene
{
    const Deployment &deployment;
    const AssociationTable &table;
    const ReferenceLinks &links;
    const InterfererBeams &beams;
};

// SINR and rate evaluation for the reference UE under one regime and one set
// of antenna counts (taken from config). The serving beams are aligned to the
// strongest path of the serving link; interferers keep their own beams and
// the reference UE's receive beam stays on its serving link.
class ReferenceEvaluator
{
  public:
    ReferenceEvaluator(const ReferenceScene &scene, const ScenarioConfig &config, const RegimeSpec &regime);

    // Throws std::invalid_argument if the serving link is in outage.
    double sinr(int serving_bs, Carrier carrier) const;

    // Candidates for every non-outage own-operator BS on both carriers, BS
    // major. Adding the reference UE makes the divisor 1 + load.
    std::vector<Candidate> candidates() const;

    Selection best() const { return best_carrier_bs(candidates()); }

    const UpaGeometry &tx_geometry(Carrier c) const { return tx_geometry_[index_of(c)]; }
    const UpaGeometry &rx_geometry(Carrier c) const { return rx_geometry_[index_of(c)]; }

  private:
    struct InterfererPath
    {
        cd coefficient; // amplitude times the transmit-side correlation
        AxisProjection arrival;
    };
    struct LinkCache
    {
        bool outage = true;
        double pathloss_db = outage_pathloss_db;
        std::vector<PathTerm> paths;
        AxisProjection strongest_departure;
        AxisProjection strongest_arrival;
        std::vector<InterfererPath> as_interferer;
    };

    const LinkCache &cache(const BsRef &bs, Carrier c) const;
    double interference_gain(const LinkCache &link, Carrier c, const AxisProjection &rx_beam) const;

    const Deployment &deployment_;
    const AssociationTable &table_;
    RegimeSpec regime_;
    std::array<UpaGeometry, 2> tx_geometry_;
    std::array<UpaGeometry, 2> rx_geometry_;
    std::array<double, 2> tx_power_dbm_{};
    std::array<double, 2> noise_mw_{};
    std::vector<std::vector<std::array<LinkCache, 2>>> links_;
};

} // namespace mmwsim
