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
#include "mmwsim/channel.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace mmwsim;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

constexpr double pi = std::numbers::pi;

Direction random_direction(RandomStream &rng)
{
    return {uniform(rng, 0.0, 2.0 * pi), uniform(rng, -pi / 2, pi / 2)};
}

ClusterSet single_path(const Direction &aoa, const Direction &aod, double phase = 0.0)
{
    return ClusterSet{{Cluster{{SubPath{1.0, phase, aoa, aod}}}}};
}

} // namespace

TEST_CASE("UPA factorization", "[antenna]")
{
    CHECK(UpaGeometry::from_count(64) == UpaGeometry{8, 8, 0.5});
    CHECK(UpaGeometry::from_count(16) == UpaGeometry{4, 4, 0.5});
    CHECK(UpaGeometry::from_count(256) == UpaGeometry{16, 16, 0.5});
    CHECK(UpaGeometry::from_count(32) == UpaGeometry{4, 8, 0.5});
    CHECK(UpaGeometry::from_count(1) == UpaGeometry{1, 1, 0.5});
    CHECK_THROWS_AS(UpaGeometry::from_count(63), std::invalid_argument);
    CHECK_THROWS_AS(UpaGeometry::from_count(0), std::invalid_argument);
}

TEST_CASE("broadside steering vector is flat", "[antenna]")
{
    const auto w = steering_vector(UpaGeometry::from_count(64), {0.0, 0.0});
    for (Eigen::Index i = 0; i < w.size(); ++i)
    {
        CHECK_THAT(w.coefficients(i).real(), WithinAbs(1.0 / 8.0, 1e-15));
        CHECK_THAT(w.coefficients(i).imag(), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("steering vectors are unit norm and self-aligned", "[antenna][property]")
{
    auto rng = make_stream({21});
    for (int n : {1, 16, 64, 256})
    {
        const auto g = UpaGeometry::from_count(n);
        for (int i = 0; i < 100; ++i)
        {
            const auto d = random_direction(rng);
            const auto w = steering_vector(g, d);
            REQUIRE(w.size() == n);
            CHECK_THAT(w.coefficients.norm(), WithinAbs(1.0, 1e-12));
            CHECK_THAT(std::abs(w.coefficients.dot(w.coefficients)), WithinAbs(1.0, 1e-12));
            CHECK_THAT(receive_vector(g, d).coefficients.norm(), WithinAbs(1.0, 1e-12));
        }
    }
}

TEST_CASE("element phase follows the documented axis convention", "[antenna]")
{
    const UpaGeometry g{2, 2, 0.5};
    const Direction d{0.4, 0.3};
    const auto u = array_response(g, d);
    const double v = std::sin(d.elevation), h = std::cos(d.elevation) * std::sin(d.azimuth);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
        {
            const cd expected = std::polar(1.0, -2.0 * pi * 0.5 * (r * v + c * h));
            CHECK_THAT(std::abs(u(r * 2 + c) - expected), WithinAbs(0.0, 1e-15));
        }
}

TEST_CASE("matched rank-one channel", "[antenna]")
{
    const auto tx = UpaGeometry::from_count(64), rx = UpaGeometry::from_count(16);
    const Direction aod{0.7, 0.2}, aoa{2.1, -0.4};
    const auto u_tx = steering_vector(tx, aod).coefficients;
    const auto u_rx = steering_vector(rx, aoa).coefficients;
    const Eigen::MatrixXcd H = u_rx * u_tx.adjoint();
    CHECK_THAT(beamforming_gain(H, steering_vector(tx, aod), receive_vector(rx, aoa)), WithinRel(1.0, 1e-12));

    const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(16, 64);
    CHECK(beamforming_gain(zero, steering_vector(tx, aod), receive_vector(rx, aoa)) == 0.0);

    CHECK_THROWS_AS(beamforming_gain(H.transpose(), steering_vector(tx, aod), receive_vector(rx, aoa)),
                    std::invalid_argument);
}

TEST_CASE("gain matches the double-loop oracle", "[antenna][property]")
{
    auto rng = make_stream({22});
    std::normal_distribution<double> n01;
    for (int trial = 0; trial < 200; ++trial)
    {
        const int nt = 1 << static_cast<int>(uniform(rng, 0, 7)), nr = 1 << static_cast<int>(uniform(rng, 0, 5));
        Eigen::MatrixXcd H(nr, nt);
        for (int a = 0; a < nr; ++a)
            for (int b = 0; b < nt; ++b)
                H(a, b) = cd(n01(rng), n01(rng));
        const auto wt = steering_vector(UpaGeometry::from_count(nt), random_direction(rng));
        const auto wr = receive_vector(UpaGeometry::from_count(nr), random_direction(rng));
        cd acc = 0.0;
        for (int a = 0; a < nr; ++a)
            for (int b = 0; b < nt; ++b)
                acc += wr.coefficients(a) * H(a, b) * wt.coefficients(b);
        const double oracle = std::norm(acc);
        CHECK_THAT(beamforming_gain(H, wt, wr), WithinAbs(oracle, 1e-10 * (1.0 + oracle)));
    }
}

TEST_CASE("gain is invariant to a global phase of H", "[antenna][property]")
{
    const auto cfg = default_config();
    const auto tx = UpaGeometry::from_count(64), rx = UpaGeometry::from_count(16);
    auto rng = make_stream({23});
    for (int i = 0; i < 50; ++i)
    {
        const auto H = channel_matrix(sample_clusters(cfg.band(Carrier::Band28), cfg.angles, rng), tx, rx);
        const auto wt = steering_vector(tx, random_direction(rng));
        const auto wr = receive_vector(rx, random_direction(rng));
        const Eigen::MatrixXcd rotated = H * std::polar(1.0, uniform(rng, 0.0, 2.0 * pi));
        const double g = beamforming_gain(H, wt, wr);
        CHECK_THAT(beamforming_gain(rotated, wt, wr), WithinAbs(g, 1e-12 * (1.0 + g)));
    }
}

TEST_CASE("maximum aligned gain constants", "[antenna]")
{
    CHECK_THAT(max_aligned_gain_db(64, 16), WithinRel(30.1029995663981195, 1e-12));
    CHECK_THAT(max_aligned_gain_db(256, 64), WithinRel(42.1441993929573673, 1e-12));
    CHECK(max_aligned_gain_db(1, 1) == 0.0);
}

TEST_CASE("alignment picks the strongest path", "[antenna]")
{
    const Direction a{0.1, 0.0}, b{1.0, 0.2}, c{2.0, -0.1}, d{3.0, 0.3};
    ClusterSet two{{Cluster{{SubPath{0.3, 0.0, a, b}}}, Cluster{{SubPath{0.7, 0.0, c, d}}}}};
    CHECK(strongest_path(two) == std::pair<std::size_t, std::size_t>{1, 0});

    ClusterSet tie{{Cluster{{SubPath{0.5, 0.0, a, b}, SubPath{0.5, 0.0, c, d}}}}};
    CHECK(strongest_path(tie) == std::pair<std::size_t, std::size_t>{0, 0});

    const auto tx = UpaGeometry::from_count(64), rx = UpaGeometry::from_count(16);
    const auto beams = align_to_strongest_path(single_path(a, b), tx, rx);
    CHECK((beams.tx.coefficients - steering_vector(tx, b).coefficients).norm() < 1e-15);
    CHECK((beams.rx.coefficients - receive_vector(rx, a).coefficients).norm() < 1e-15);
}

TEST_CASE("single-path channels reach and never exceed n_tx n_rx", "[antenna][property]")
{
    auto rng = make_stream({24});
    for (auto [nt, nr] : {std::pair{64, 16}, std::pair{256, 64}})
    {
        const auto tx = UpaGeometry::from_count(nt), rx = UpaGeometry::from_count(nr);
        const double bound = static_cast<double>(nt) * nr;
        for (int i = 0; i < 100; ++i)
        {
            const auto cs = single_path(random_direction(rng), random_direction(rng), uniform(rng, 0.0, 2.0 * pi));
            const auto H = channel_matrix(cs, tx, rx);
            const auto beams = align_to_strongest_path(cs, tx, rx);
            CHECK_THAT(beamforming_gain(H, beams.tx, beams.rx), WithinRel(bound, 1e-9));
            const auto wt = steering_vector(tx, random_direction(rng));
            const auto wr = receive_vector(rx, random_direction(rng));
            CHECK(beamforming_gain(H, wt, wr) <= bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("DFT-grid steering vectors are orthogonal", "[antenna][property]")
{
    // Half-wavelength 8x8 array: projections spaced by 2/8 are orthogonal.
    const auto g = UpaGeometry::from_count(64);
    for (double v1 : {0.0, 0.25})
        for (double v2 : {0.0, 0.25, 0.5, -0.25})
        {
            if (v1 == v2)
                continue;
            const Direction d1{0.0, std::asin(v1)}, d2{0.0, std::asin(v2)};
            const cd ip = steering_vector(g, d1).coefficients.dot(steering_vector(g, d2).coefficients);
            CHECK(std::abs(ip) < 1e-12);
        }
    // Horizontal axis at broadside elevation.
    const Direction h1{0.0, 0.0}, h2{std::asin(0.25), 0.0};
    CHECK(std::abs(steering_vector(g, h1).coefficients.dot(steering_vector(g, h2).coefficients)) < 1e-12);
}

TEST_CASE("factored correlation matches the explicit inner product", "[antenna][property]")
{
    auto rng = make_stream({25});
    for (int n : {1, 16, 32, 64, 256})
    {
        const auto g = UpaGeometry::from_count(n);
        for (int i = 0; i < 50; ++i)
        {
            const auto da = random_direction(rng), db = random_direction(rng);
            const cd explicit_ip = steering_vector(g, da).coefficients.dot(steering_vector(g, db).coefficients);
            const cd fast = steering_correlation(g, AxisProjection::of(da), AxisProjection::of(db));
            CHECK(std::abs(fast - explicit_ip) < 1e-12);
        }
        const auto d = random_direction(rng);
        CHECK_THAT(std::abs(steering_correlation(g, AxisProjection::of(d), AxisProjection::of(d))),
                   WithinAbs(1.0, 1e-12));
    }
}
