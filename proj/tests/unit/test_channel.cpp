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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace mmwsim;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

double power_sum(const ClusterSet &cs)
{
    double s = 0.0;
    for (const auto &c : cs.clusters)
        for (const auto &p : c.subpaths)
            s += p.power_fraction;
    return s;
}

BandConfig noiseless(BandConfig b)
{
    b.pathloss.sigma_los = 0.0;
    b.pathloss.sigma_nlos = 0.0;
    return b;
}

} // namespace

TEST_CASE("blockage probabilities at reference distances", "[channel]")
{
    const BlockageParams bp;

    auto p0 = state_probabilities(0.0, bp);
    CHECK(p0.outage == 0.0);
    CHECK(p0.los == 1.0);
    CHECK(p0.nlos == 0.0);

    const double boundary = bp.b_out / bp.a_out;
    CHECK_THAT(boundary, WithinRel(155.688622754491, 1e-12));
    auto pb = state_probabilities(boundary, bp);
    CHECK_THAT(pb.outage, WithinAbs(0.0, 1e-15));
    CHECK_THAT(pb.los, WithinRel(0.0982971270069569, 1e-9));

    auto p200 = state_probabilities(200.0, bp);
    CHECK_THAT(p200.outage, WithinRel(0.772362311616187, 1e-9));
    CHECK_THAT(p200.los, WithinRel(0.0115623632874685, 1e-9));
    CHECK_THAT(p200.nlos, WithinRel(0.216075325096344, 1e-9));

    CHECK_THAT(state_probabilities(50.0, bp).los, WithinRel(0.474734299939912, 1e-9));
    CHECK_THAT(state_probabilities(100.0, bp).los, WithinRel(0.225372655539439, 1e-9));
    auto p300 = state_probabilities(300.0, bp);
    CHECK_THAT(p300.outage, WithinRel(0.991933212860900, 1e-9));
    CHECK_THAT(p300.los, WithinRel(9.2343060280070637e-5, 1e-9));
}

TEST_CASE("blockage probabilities sum to one and are monotone", "[channel][property]")
{
    const BlockageParams bp;
    const double boundary = bp.b_out / bp.a_out;
    StateProbabilities prev = state_probabilities(0.0, bp);
    for (double d = 0.0; d <= 1500.0; d += 0.5)
    {
        const auto p = state_probabilities(d, bp);
        CHECK(std::abs(p.outage + p.los + p.nlos - 1.0) <= 1e-15);
        CHECK(p.outage >= 0.0);
        CHECK(p.los >= 0.0);
        CHECK(p.nlos >= -1e-15);
        CHECK(p.outage >= prev.outage);
        if (d > boundary)
            CHECK(p.los <= prev.los);
        prev = p;
    }
}

TEST_CASE("link state draws follow the blockage law", "[channel][property]")
{
    auto rng = make_stream({101});
    for (int i = 0; i < 1000; ++i)
        REQUIRE(draw_link_state(0.0, rng, BlockageParams{}) == LinkState::LoS);

    const int n = 100000;
    int outage = 0;
    for (int i = 0; i < n; ++i)
        outage += draw_link_state(200.0, rng, BlockageParams{}) == LinkState::Outage;
    const double p = 0.772362311616187;
    CHECK(std::abs(static_cast<double>(outage) / n - p) < 3.0 * std::sqrt(p * (1.0 - p) / n));
}

TEST_CASE("pathloss without shadowing", "[channel]")
{
    const auto cfg = default_config();
    const auto b28 = noiseless(cfg.band(Carrier::Band28));
    const auto b73 = noiseless(cfg.band(Carrier::Band73));
    auto rng = make_stream({3});

    CHECK(pathloss_db(1.0, LinkState::LoS, b28, rng) == 61.4);
    CHECK(pathloss_db(1.0, LinkState::NLoS, b28, rng) == 72.0);
    CHECK(pathloss_db(1.0, LinkState::LoS, b73, rng) == 69.8);
    CHECK(pathloss_db(1.0, LinkState::NLoS, b73, rng) == 86.6);
    CHECK_THAT(pathloss_db(100.0, LinkState::LoS, b28, rng), WithinRel(101.4, 1e-12));
    CHECK_THAT(mean_pathloss_db(100.0, LinkState::NLoS, b73), WithinRel(86.6 + 49.0, 1e-12));

    CHECK_THROWS(mean_pathloss_db(100.0, LinkState::Outage, b28));
    CHECK_THROWS(mean_pathloss_db(0.0, LinkState::LoS, b28));
}

TEST_CASE("shadowing variance", "[channel][property]")
{
    const auto b = default_config().band(Carrier::Band28);
    auto rng = make_stream({4});
    const int n = 100000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double x = pathloss_db(100.0, LinkState::NLoS, b, rng) - mean_pathloss_db(100.0, LinkState::NLoS, b);
        s += x;
        s2 += x * x;
    }
    const double var = (s2 - s * s / n) / (n - 1);
    const double sigma2 = b.pathloss.sigma_nlos * b.pathloss.sigma_nlos;
    // Sample variance of a normal has sd sigma^2 sqrt(2/(n-1)).
    CHECK(std::abs(var - sigma2) < 3.0 * sigma2 * std::sqrt(2.0 / (n - 1)));
}

TEST_CASE("cluster structure and normalization", "[channel][property]")
{
    const auto cfg = default_config();
    auto rng = make_stream({5});
    for (int i = 0; i < 20000; ++i)
    {
        const auto &band = cfg.band(i % 2 ? Carrier::Band73 : Carrier::Band28);
        const auto cs = sample_clusters(band, cfg.angles, rng);
        REQUIRE(!cs.clusters.empty());
        for (const auto &c : cs.clusters)
        {
            REQUIRE(c.subpaths.size() >= 1);
            REQUIRE(c.subpaths.size() <= 10);
            for (const auto &p : c.subpaths)
            {
                REQUIRE(p.power_fraction >= 0.0);
                REQUIRE(p.power_fraction <= 1.0);
            }
        }
        REQUIRE(std::abs(power_sum(cs) - 1.0) <= 1e-12);
    }

    auto band = cfg.band(Carrier::Band28);
    band.cluster_mean = 1e-9;
    for (int i = 0; i < 100; ++i)
        CHECK(sample_clusters(band, cfg.angles, rng).clusters.size() == 1);
}

TEST_CASE("channel matrix shape and energy", "[channel]")
{
    ClusterSet one{{Cluster{{SubPath{1.0, 0.0, {0.3, 0.1}, {1.2, -0.2}}}}}};
    const auto tx = UpaGeometry::from_count(64), rx = UpaGeometry::from_count(16);
    const auto H = channel_matrix(one, tx, rx);
    CHECK(H.rows() == 16);
    CHECK(H.cols() == 64);
    // Unit-modulus responses: a rank-one unit-power path has |H|_F^2 = n_tx n_rx.
    CHECK_THAT(H.squaredNorm(), WithinRel(64.0 * 16.0, 1e-12));

    const auto H2 = channel_matrix(one, UpaGeometry::from_count(256), UpaGeometry::from_count(64));
    CHECK(H2.rows() == 64);
    CHECK(H2.cols() == 256);
}

TEST_CASE("mean channel energy per element pair is one", "[channel][property]")
{
    const auto cfg = default_config();
    const auto tx = UpaGeometry::from_count(16), rx = UpaGeometry::from_count(4);
    auto rng = make_stream({6});
    const int n = 4000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double e = channel_matrix(sample_clusters(cfg.band(Carrier::Band28), cfg.angles, rng), tx, rx)
                             .squaredNorm() /
                         (16.0 * 4.0);
        s += e;
        s2 += e * e;
    }
    const double mean = s / n;
    const double se = std::sqrt((s2 / n - mean * mean) / n);
    CHECK(std::abs(mean - 1.0) < 4.0 * se);
}

TEST_CASE("compiled paths reproduce the explicit matrix gain", "[channel][property]")
{
    const auto cfg = default_config();
    const auto tx = UpaGeometry::from_count(64), rx = UpaGeometry::from_count(16);
    auto rng = make_stream({7});
    for (int i = 0; i < 200; ++i)
    {
        const auto cs = sample_clusters(cfg.band(Carrier::Band73), cfg.angles, rng);
        const Direction dt{uniform(rng, 0.0, 2.0 * std::numbers::pi), uniform(rng, -0.7, 0.7)};
        const Direction dr{uniform(rng, 0.0, 2.0 * std::numbers::pi), uniform(rng, -0.7, 0.7)};
        const double explicit_gain =
            beamforming_gain(channel_matrix(cs, tx, rx), steering_vector(tx, dt), receive_vector(rx, dr));
        const double fast = steered_gain(compile_paths(cs), tx, rx, AxisProjection::of(dt), AxisProjection::of(dr));
        CHECK_THAT(fast, WithinAbs(explicit_gain, 1e-9 * (1.0 + explicit_gain)));
    }
}

TEST_CASE("dual-band links share the blockage state", "[channel][property]")
{
    const auto cfg = default_config();
    auto rng = make_stream({8});
    for (int i = 0; i < 5000; ++i)
    {
        const double d = uniform(rng, 0.0, 300.0);
        const auto link = draw_link(d, cfg, rng, i % 4 == 0);
        const auto l28 = link.band(Carrier::Band28), l73 = link.band(Carrier::Band73);
        REQUIRE(l28.state == l73.state);
        if (link.in_outage())
        {
            REQUIRE(std::isinf(l28.pathloss_db));
            REQUIRE(std::isinf(l73.pathloss_db));
            REQUIRE(l28.clusters.clusters.empty());
        }
        else
        {
            REQUIRE(std::isfinite(l28.pathloss_db));
            REQUIRE(std::isfinite(l73.pathloss_db));
            REQUIRE((i % 4 != 0 || !l73.clusters.clusters.empty()));
        }
    }
}

TEST_CASE("bearings between sites", "[channel]")
{
    const auto b = bearing(0.0, 0.0, 10.0, 0.0);
    CHECK(b.departure_azimuth == 0.0);
    CHECK_THAT(b.arrival_azimuth, WithinAbs(std::numbers::pi, 1e-15));
    const auto c = bearing(0.0, 0.0, 0.0, -5.0);
    CHECK_THAT(c.departure_azimuth, WithinAbs(1.5 * std::numbers::pi, 1e-15));
    CHECK_THAT(c.arrival_azimuth, WithinAbs(0.5 * std::numbers::pi, 1e-15));
}

TEST_CASE("geometric anchor centers the first cluster", "[channel]")
{
    auto cfg = default_config();
    cfg.angles.geometric_anchor = true;
    const LinkBearing anchor{1.0, 4.0};
    auto rng = make_stream({9});
    const auto cs = sample_clusters(cfg.band(Carrier::Band28), cfg.angles, rng, &anchor);
    double dep = 0.0, arr = 0.0;
    for (const auto &p : cs.clusters[0].subpaths)
    {
        dep += p.departure.azimuth;
        arr += p.arrival.azimuth;
    }
    const double n = static_cast<double>(cs.clusters[0].subpaths.size());
    // Offsets have a 10 degree sd, so the mean sits well within 0.6 rad.
    CHECK(std::abs(dep / n - 1.0) < 0.6);
    CHECK(std::abs(arr / n - 4.0) < 0.6);
}
