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

#include "mmwsim/association.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mmwsim
{

std::size_t AssociationTable::associated_users() const
{
    std::size_t n = 0;
    for (const auto &op : operators)
        for (const auto &s : op.serving_bs)
            n += s.has_value();
    return n;
}

std::size_t AssociationTable::total_load() const
{
    std::size_t n = 0;
    for (const auto &op : operators)
        for (const auto &l : op.load)
            n += static_cast<std::size_t>(l[0] + l[1]);
    return n;
}

BackgroundLinks draw_background_links(const Deployment &deployment, const ScenarioConfig &config, RandomStream &rng)
{
    BackgroundLinks out(deployment.operators.size());
    for (std::size_t m = 0; m < deployment.operators.size(); ++m)
    {
        const auto &sites = deployment.operators[m];
        OperatorLinks &ol = out[m];
        ol.num_users = sites.users.size();
        ol.num_bs = sites.base_stations.size();
        ol.links.reserve(ol.num_users * ol.num_bs);
        for (const Point &ue : sites.users)
            for (const Point &bs : sites.base_stations)
                ol.links.push_back(draw_link(distance(ue, bs), config, rng, false));
    }
    return out;
}

AssociationTable min_pathloss_association(const Deployment &deployment, const BackgroundLinks &links,
                                          AssociationRule rule)
{
    auto ranking_pathloss = [rule](const DualBandLink &l) {
        switch (rule)
        {
        case AssociationRule::Band28:
            return l.pathloss_db[0];
        case AssociationRule::Band73:
            return l.pathloss_db[1];
        case AssociationRule::MinOverBands:
            return std::min(l.pathloss_db[0], l.pathloss_db[1]);
        }
        return l.pathloss_db[0];
    };

    AssociationTable table;
    table.operators.resize(deployment.operators.size());
    for (std::size_t m = 0; m < deployment.operators.size(); ++m)
    {
        const OperatorLinks &ol = links[m];
        OperatorAssociation &oa = table.operators[m];
        oa.serving_bs.assign(ol.num_users, std::nullopt);
        oa.carrier.assign(ol.num_users, std::nullopt);
        oa.load.assign(ol.num_bs, {0, 0});
        for (std::size_t j = 0; j < ol.num_users; ++j)
        {
            double best = outage_pathloss_db;
            for (std::size_t i = 0; i < ol.num_bs; ++i)
            {
                const DualBandLink &l = ol.at(j, i);
                if (l.in_outage())
                    continue;
                const double pl = ranking_pathloss(l);
                if (pl < best)
                {
                    best = pl;
                    oa.serving_bs[j] = static_cast<int>(i);
                }
            }
        }
    }
    return table;
}

AssociationTable random_band_assignment(AssociationTable table, double p28, RandomStream &rng)
{
    for (auto &oa : table.operators)
        for (std::size_t j = 0; j < oa.serving_bs.size(); ++j)
        {
            if (!oa.serving_bs[j])
                continue;
            const Carrier c = uniform01(rng) < p28 ? Carrier::Band28 : Carrier::Band73;
            oa.carrier[j] = c;
            ++oa.load[*oa.serving_bs[j]][index_of(c)];
        }
    return table;
}

InterfererBeams draw_interferer_beams(const Deployment &deployment, const AssociationTable &table,
                                      const ScenarioConfig &config, RandomStream &rng)
{
    const double el_max = config.angles.elevation_max_deg * std::numbers::pi / 180.0;
    InterfererBeams beams(deployment.operators.size());
    for (std::size_t m = 0; m < deployment.operators.size(); ++m)
    {
        const OperatorAssociation &oa = table.operators[m];
        const std::size_t num_bs = deployment.operators[m].base_stations.size();

        // served[bs][carrier] -> UE indices
        std::vector<std::array<std::vector<std::size_t>, 2>> served(num_bs);
        for (std::size_t j = 0; j < oa.serving_bs.size(); ++j)
            if (oa.serving_bs[j] && oa.carrier[j])
                served[*oa.serving_bs[j]][index_of(*oa.carrier[j])].push_back(j);

        beams[m].resize(num_bs);
        for (std::size_t i = 0; i < num_bs; ++i)
            for (Carrier c : all_carriers)
            {
                const auto &users = served[i][index_of(c)];
                Direction &dir = beams[m][i][index_of(c)];
                if (users.empty())
                {
                    dir = {uniform(rng, 0.0, 2.0 * std::numbers::pi), uniform(rng, -el_max, el_max)};
                    continue;
                }
                std::uniform_int_distribution<std::size_t> pick(0, users.size() - 1);
                const Point &bs = deployment.operators[m].base_stations[i];
                const Point &ue = deployment.operators[m].users[users[pick(rng)]];
                const LinkBearing b = bearing(bs.x, bs.y, ue.x, ue.y);
                const ClusterSet clusters = sample_clusters(config.band(c), config.angles, rng, &b);
                const auto [k, l] = strongest_path(clusters);
                dir = clusters.clusters[k].subpaths[l].departure;
            }
    }
    return beams;
}

ReferenceLinks draw_reference_links(const Deployment &deployment, const ScenarioConfig &config, RandomStream &rng)
{
    ReferenceLinks links(deployment.operators.size());
    for (std::size_t m = 0; m < deployment.operators.size(); ++m)
        for (const Point &bs : deployment.operators[m].base_stations)
        {
            const Point &ue = deployment.reference_ue;
            const LinkBearing b = bearing(bs.x, bs.y, ue.x, ue.y);
            links[m].push_back(draw_link(distance(bs, ue), config, rng, true, &b));
        }
    return links;
}

RegimeSpec make_regime(Regime regime, const ScenarioConfig &config)
{
    RegimeSpec spec;
    switch (regime)
    {
    case Regime::Hybrid:
        spec.licensing = {Licensing::Exclusive, Licensing::Pooled};
        break;
    case Regime::Licensed:
        spec.licensing = {Licensing::Exclusive, Licensing::Exclusive};
        break;
    case Regime::Pooled:
        spec.licensing = {Licensing::Pooled, Licensing::Pooled};
        break;
    }
    for (Carrier c : all_carriers)
    {
        const double total = config.band(c).total_bandwidth;
        spec.bandwidth_hz[index_of(c)] =
            spec.licensing_of(c) == Licensing::Exclusive ? total / config.num_operators : total;
    }
    return spec;
}

RegimeSpec regime_from_config(const ScenarioConfig &config)
{
    RegimeSpec spec;
    for (Carrier c : all_carriers)
    {
        const BandConfig &b = config.band(c);
        spec.licensing[index_of(c)] = b.licensing;
        spec.bandwidth_hz[index_of(c)] =
            b.licensing == Licensing::Exclusive ? b.total_bandwidth / config.num_operators : b.total_bandwidth;
    }
    return spec;
}

std::vector<BsRef> interferer_set(const RegimeSpec &regime, Carrier carrier, const BsRef &serving,
                                  const Deployment &deployment)
{
    std::vector<BsRef> out;
    const bool pooled = regime.licensing_of(carrier) == Licensing::Pooled;
    for (int m = 0; m < deployment.num_operators(); ++m)
    {
        if (!pooled && m != serving.op)
            continue;
        const int n = static_cast<int>(deployment.operators[m].base_stations.size());
        for (int i = 0; i < n; ++i)
            if (BsRef{m, i} != serving)
                out.push_back({m, i});
    }
    return out;
}

double received_power_mw(const SignalTerm &term)
{
    if (std::isinf(term.pathloss_db))
        return 0.0;
    return std::pow(10.0, (term.tx_power_dbm - term.pathloss_db) / 10.0) * term.gain;
}

double noise_power_mw(double bandwidth_hz, double noise_psd_dbm_hz, double noise_figure_db)
{
    return std::pow(10.0, (noise_psd_dbm_hz + noise_figure_db) / 10.0) * bandwidth_hz;
}

double sinr(const SignalTerm &serving, std::span<const SignalTerm> interferers, double noise_mw)
{
    double interference = 0.0;
    for (const auto &t : interferers)
        interference += received_power_mw(t);
    return received_power_mw(serving) / (interference + noise_mw);
}

double throughput(double bandwidth_hz, int n_loaded, double sinr_linear)
{
    return bandwidth_hz / (1.0 + n_loaded) * std::log1p(sinr_linear) / std::numbers::ln2;
}

Selection best_carrier_bs(std::span<const Candidate> candidates)
{
    const Candidate *best = nullptr;
    for (const auto &c : candidates)
    {
        if (!best || c.rate > best->rate ||
            (c.rate == best->rate && std::pair(index_of(c.carrier), c.bs) < std::pair(index_of(best->carrier), best->bs)))
            best = &c;
    }
    Selection s;
    if (best)
    {
        s.bs = best->bs;
        s.carrier = best->carrier;
        s.rate = best->rate;
        s.sinr = best->sinr;
        s.load = best->load;
        s.bandwidth_hz = best->bandwidth_hz;
    }
    return s;
}

ReferenceEvaluator::ReferenceEvaluator(const ReferenceScene &scene, const ScenarioConfig &config,
                                       const RegimeSpec &regime)
    : deployment_(scene.deployment), table_(scene.table), regime_(regime)
{
    for (Carrier c : all_carriers)
    {
        const BandConfig &b = config.band(c);
        const auto ci = index_of(c);
        tx_geometry_[ci] = UpaGeometry::from_count(b.n_tx, config.element_spacing);
        rx_geometry_[ci] = UpaGeometry::from_count(b.n_rx, config.element_spacing);
        tx_power_dbm_[ci] = b.tx_power;
        noise_mw_[ci] = noise_power_mw(regime.bandwidth(c), config.noise_psd, config.noise_figure);
    }

    links_.resize(deployment_.operators.size());
    for (std::size_t m = 0; m < links_.size(); ++m)
    {
        links_[m].resize(scene.links[m].size());
        for (std::size_t i = 0; i < links_[m].size(); ++i)
        {
            const DualBandLink &link = scene.links[m][i];
            for (Carrier c : all_carriers)
            {
                const auto ci = index_of(c);
                LinkCache &lc = links_[m][i][ci];
                lc.outage = link.in_outage();
                if (lc.outage)
                    continue;
                lc.pathloss_db = link.pathloss_db[ci];
                lc.paths = compile_paths(link.clusters[ci]);
                const auto [k, l] = strongest_path(link.clusters[ci]);
                const SubPath &sp = link.clusters[ci].clusters[k].subpaths[l];
                lc.strongest_departure = AxisProjection::of(sp.departure);
                lc.strongest_arrival = AxisProjection::of(sp.arrival);

                const AxisProjection own_beam = AxisProjection::of(scene.beams[m][i][ci]);
                lc.as_interferer.reserve(lc.paths.size());
                for (const PathTerm &p : lc.paths)
                    lc.as_interferer.push_back(
                        {p.amplitude * steering_correlation(tx_geometry_[ci], p.departure, own_beam), p.arrival});
            }
        }
    }
}

const ReferenceEvaluator::LinkCache &ReferenceEvaluator::cache(const BsRef &bs, Carrier c) const
{
    return links_[bs.op][bs.index][index_of(c)];
}

double ReferenceEvaluator::interference_gain(const LinkCache &link, Carrier c, const AxisProjection &rx_beam) const
{
    const UpaGeometry &rx = rx_geometry_[index_of(c)];
    cd y = 0.0;
    for (const auto &p : link.as_interferer)
        y += p.coefficient * steering_correlation(rx, rx_beam, p.arrival);
    return static_cast<double>(tx_geometry_[index_of(c)].size()) * static_cast<double>(rx.size()) * std::norm(y);
}

double ReferenceEvaluator::sinr(int serving_bs, Carrier carrier) const
{
    const BsRef serving{deployment_.reference_operator, serving_bs};
    const LinkCache &link = cache(serving, carrier);
    if (link.outage)
        throw std::invalid_argument("sinr: serving link to BS " + std::to_string(serving_bs) + " is in outage");
    const auto ci = index_of(carrier);

    const double signal_gain = steered_gain(link.paths, tx_geometry_[ci], rx_geometry_[ci], link.strongest_departure,
                                            link.strongest_arrival);
    const SignalTerm signal{tx_power_dbm_[ci], link.pathloss_db, signal_gain};

    std::vector<SignalTerm> interferers;
    for (const BsRef &k : interferer_set(regime_, carrier, serving, deployment_))
    {
        const LinkCache &lk = cache(k, carrier);
        if (lk.outage)
            interferers.push_back({tx_power_dbm_[ci], outage_pathloss_db, 0.0});
        else
            interferers.push_back({tx_power_dbm_[ci], lk.pathloss_db, interference_gain(lk, carrier, link.strongest_arrival)});
    }
    return mmwsim::sinr(signal, interferers, noise_mw_[ci]);
}

std::vector<Candidate> ReferenceEvaluator::candidates() const
{
    std::vector<Candidate> out;
    const int ref_op = deployment_.reference_operator;
    const int num_bs = static_cast<int>(links_[ref_op].size());
    for (int i = 0; i < num_bs; ++i)
        for (Carrier c : all_carriers)
        {
            if (cache({ref_op, i}, c).outage)
                continue;
            Candidate cand;
            cand.bs = i;
            cand.carrier = c;
            cand.sinr = sinr(i, c);
            cand.load = table_.load({ref_op, i}, c);
            cand.bandwidth_hz = regime_.bandwidth(c);
            cand.rate = throughput(cand.bandwidth_hz, cand.load, cand.sinr);
            out.push_back(cand);
        }
    return out;
}

} // namespace mmwsim
