// SPDX-License-Identifier: Apache-2.0
//
// swanrel: reliability and link analysis for segmented pinching-antenna waveguides
// Copyright (C) 2026 The swanrel Authors
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

#include "swan/placement.hpp"
#include "swan/random.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using Catch::Approx;
using namespace swan;

namespace
{
    double congruence_error(double a, double b, double lam)
    {
        const double x = (a - b) / lam;
        return std::abs(x - std::round(x)) * lam;
    }
}

TEST_CASE("electrical length", "[placement]")
{
    const RfParams rf;
    const Geometry geo;
    CHECK(electrical_length(0.0, 0.0, geo, rf) == Approx(3.0));

    RfConfig unit_index;
    unit_index.n_eff = 1.0;
    CHECK(electrical_length(0.0, -2.0, geo, RfParams(unit_index)) == Approx(5.0));

    CHECK(electrical_length(5.0, 2.5, geo, rf) == Approx(std::sqrt(34.0) + 1.4 * 2.5).epsilon(1e-15));
    CHECK(electrical_length(5.0, 2.5, geo, rf) == Approx(9.3310).margin(1e-4));
    CHECK_THROWS_AS(electrical_length(0.0, 1.0, geo, rf), std::domain_error);
}

TEST_CASE("closed-form alignment inverts the electrical length", "[placement][property]")
{
    RandomStream rng(314);
    for (double n : {1.0, 1.05, 1.4, 2.5})
    {
        RfConfig cfg;
        cfg.n_eff = n;
        const RfParams rf(cfg);
        for (int i = 0; i < 300; ++i)
        {
            Geometry geo;
            geo.user.x = -10 + 20 * rng.uniform();
            geo.user.y = 10 * rng.uniform();
            const double feed = -30 + 40 * rng.uniform();
            const double x = feed + 15 * rng.uniform();
            const double target = electrical_length(x, feed, geo, rf);
            const double closed = align_position_closed_form(target, feed, geo, rf);
            CHECK(closed == Approx(x).margin(1e-9));
            const double left = align_position_root_solve(target, feed, x + 1.0, ShiftDirection::left, geo, rf);
            const double right = align_position_root_solve(target, feed, x - 1.0, ShiftDirection::right, geo, rf);
            CHECK(left == Approx(x).margin(1e-10));
            CHECK(right == Approx(x).margin(1e-10));
        }
    }
}

TEST_CASE("already congruent antennas are not shifted", "[placement]")
{
    const RfParams rf;
    const Geometry geo;
    const double feed = -25.0, x = -20.0;
    const double d = electrical_length(x, feed, geo, rf);
    CHECK(align_position_closed_form(d, feed, geo, rf) == Approx(x).margin(1e-12));
}

TEST_CASE("phase-aligned placement", "[placement]")
{
    const RfParams rf;
    const Geometry geo;
    const double lam = rf.wavelength();
    for (std::size_t M : {1u, 2u, 3u, 5u, 10u, 11u, 20u, 40u})
    {
        CAPTURE(M);
        const auto wg = SegmentedWaveguide::over(geo, M);
        const auto sol = place_antennas_sa(wg, rf, geo);
        REQUIRE(sol.segments.size() == M);
        CHECK(sol.kind == PlacementKind::phase_aligned);
        CHECK(sol.nearest == select_segment(geo.user.x, wg));

        const auto &near = sol.segments[sol.nearest];
        CHECK(near.position == geo.user.x);
        CHECK(near.shift == 0.0);
        CHECK(sol.reference_length == Approx(electrical_length(geo.user.x, near.feed, geo, rf)));
        CHECK(sol.feasible());
        CHECK(sol.min_gap() >= rf.min_spacing() * (1 - 1e-12));

        for (std::size_t m = 0; m < M; ++m)
        {
            const auto &s = sol.segments[m];
            CAPTURE(m);
            CHECK(s.feed == Approx(wg.feed(m)));
            CHECK(s.in_segment);
            CHECK(s.spacing_ok);
            CHECK(s.closed_form_agrees);
            CHECK(s.closed_form_gap <= kAlignmentTolerance);
            CHECK(std::abs(s.residual) < 1e-9);
            const double el = electrical_length(s.position, s.feed, geo, rf);
            CHECK(el == Approx(s.electrical_length).epsilon(1e-15));
            CHECK(congruence_error(el, sol.reference_length, lam) < 1e-9);

            // shifts point away from the user and stay below one wavelength of electrical length
            CHECK(s.shift >= 0.0);
            CHECK(s.shift <= lam / (rf.n_eff() - 1.0) + 1e-12);
            if (m < sol.nearest)
                CHECK(s.position <= s.initial);
            if (m > sol.nearest)
                CHECK(s.position >= s.initial);
            CHECK(s.shift == Approx(std::abs(s.position - s.initial)).margin(1e-15));
        }
    }
}

TEST_CASE("initial positions are the admissible points closest to the user", "[placement]")
{
    const RfParams rf;
    const Geometry geo;
    const auto wg = SegmentedWaveguide::over(geo, 5);
    const auto sol = place_antennas_sa(wg, rf, geo);
    REQUIRE(sol.nearest == 2);
    CHECK(sol.segments[1].initial == Approx(wg.segment_end(1)));
    CHECK(sol.segments[0].initial == Approx(wg.segment_end(0)));
    CHECK(sol.segments[3].initial == Approx(wg.feed(3)));
    CHECK(sol.segments[4].initial == Approx(wg.feed(4)));
}

TEST_CASE("placement with an off-center user", "[placement][property]")
{
    const RfParams rf;
    RandomStream rng(8);
    for (int i = 0; i < 200; ++i)
    {
        Geometry geo;
        geo.user.x = -24.0 + 48.0 * rng.uniform();
        geo.user.y = 8.0 * rng.uniform();
        const std::size_t M = 1 + static_cast<std::size_t>(15 * rng.uniform());
        const auto sol = place_antennas_sa(SegmentedWaveguide::over(geo, M), rf, geo);
        CHECK(sol.segments[sol.nearest].position == geo.user.x);
        for (const auto &s : sol.segments)
        {
            CHECK(std::abs(s.residual) < 1e-9);
            CHECK(s.closed_form_agrees);
            CHECK(s.spacing_ok);
        }
    }
}

TEST_CASE("infeasible segments are flagged, not clamped", "[placement]")
{
    const RfParams rf; // lambda / 2 ~ 5.35 mm
    Geometry geo;
    geo.region_x = 0.02;
    geo.first_feed_x = -0.01;
    const auto sol = place_antennas_sa(SegmentedWaveguide::over(geo, 5), rf, geo);
    CHECK_FALSE(sol.feasible());
    bool outside = false;
    for (const auto &s : sol.segments)
    {
        outside = outside || !s.in_segment;
        CHECK(std::abs(s.residual) < 1e-9); // still phase aligned where it landed
    }
    CHECK(outside);
}

TEST_CASE("centered placement", "[placement]")
{
    const RfParams rf;
    const Geometry geo;
    const auto wg = SegmentedWaveguide::over(geo, 5);
    const auto sol = place_antennas_centered(wg, rf, geo);
    CHECK(sol.kind == PlacementKind::centered);
    for (std::size_t m = 0; m < 5; ++m)
    {
        CHECK(sol.segments[m].position == Approx(wg.feed(m) + 5.0));
        CHECK(sol.segments[m].shift == 0.0);
    }
    CHECK(sol.feasible());
    CHECK(sol.min_gap() == Approx(10.0));
}
