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

#include "support/oracles.hpp"
#include "swan/random.hpp"
#include "swan/reliability.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using Catch::Approx;
using namespace swan;

TEST_CASE("lifetime distribution", "[reliability]")
{
    CHECK(lifetime_cdf(0.0, 2.0) == 0.0);
    CHECK(lifetime_cdf(1e6, 2.0) == 1.0);
    CHECK(lifetime_cdf(0.5, 2.0) == Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    CHECK(lifetime_cdf(0.5, 2.0) == Approx(0.63212).margin(1e-5));
    CHECK_THROWS_AS(lifetime_cdf(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(lifetime_cdf(1.0, 0.0), std::domain_error);
}

TEST_CASE("mean time to failure and repair", "[reliability]")
{
    CHECK(mttf(2.0) == 0.5);
    CHECK(mttr(4.0) == 0.25);

    const UnitRates unit{0.3, 1.0};
    const double dx = 50.0;
    const auto whole = rates_for_length(unit, dx);
    CHECK(mttf(whole.lambda) == Approx(1.0 / (0.3 * dx)));
    for (int m : {2, 5, 10})
    {
        const auto seg = rates_for_length(unit, dx / m);
        CHECK(mttf(seg.lambda) == Approx(m * mttf(whole.lambda)));
    }
}

TEST_CASE("rates scale with component length", "[reliability]")
{
    const auto unit = rates_for_length({0.3, 1.0}, 1.0);
    CHECK(unit.lambda == 0.3);
    CHECK(unit.mu == 1.0);

    const auto r = rates_for_length({0.3, 1.0}, 50.0);
    CHECK(r.lambda == Approx(15.0));
    CHECK(r.mu == Approx(0.02));
    CHECK(r.length == 50.0);
    CHECK(UnitRates{0.3, 1.0}.eps0() == Approx(0.3));

    CHECK_THROWS_AS(rates_for_length({0.3, 1.0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(rates_for_length({-0.3, 1.0}, 1.0), std::domain_error);
}

TEST_CASE("transition probabilities match the forward equations", "[reliability]")
{
    const ComponentRates rates{1.0, 0.7, 1.9};
    for (double t : {0.0, 0.01, 0.3, 1.0, 4.0})
    {
        const auto p = transition_probabilities(t, rates);
        const auto ref = oracle::ctmc_rk4(rates.lambda, rates.mu, t);
        CHECK(p.p11 == Approx(ref[0]).margin(1e-12));
        CHECK(p.p10 == Approx(ref[1]).margin(1e-12));
        CHECK(p.p00 == Approx(ref[2]).margin(1e-12));
        CHECK(p.p01 == Approx(ref[3]).margin(1e-12));
    }
}

TEST_CASE("transition probability limits", "[reliability]")
{
    const ComponentRates rates{1.0, 2.0, 3.0};
    const auto p0 = transition_probabilities(0.0, rates);
    CHECK(p0.p11 == 1.0);
    CHECK(p0.p00 == 1.0);
    CHECK(p0.p10 == 0.0);
    CHECK(p0.p01 == 0.0);

    const auto inf = transition_probabilities(1e3, rates);
    CHECK(inf.p11 == Approx(0.6).epsilon(1e-14));
    CHECK(inf.p01 == Approx(0.6).epsilon(1e-14));

    // lambda = mu and (lambda + mu) t = ln 2
    const ComponentRates sym{1.0, 1.5, 1.5};
    CHECK(transition_probabilities(std::numbers::ln2 / 3.0, sym).p11 == Approx(0.75).epsilon(1e-14));
}

TEST_CASE("transition probability properties", "[reliability][property]")
{
    RandomStream rng(2024, 7);
    for (int trial = 0; trial < 500; ++trial)
    {
        const ComponentRates rates{1.0, 0.01 + 10 * rng.uniform(), 0.01 + 10 * rng.uniform()};
        const double s = 3 * rng.uniform(), t = 3 * rng.uniform();
        const auto ps = transition_probabilities(s, rates);
        const auto pt = transition_probabilities(t, rates);
        const auto pst = transition_probabilities(s + t, rates);

        // rows are distributions
        CHECK(ps.p11 + ps.p10 == Approx(1.0).margin(1e-15));
        CHECK(ps.p00 + ps.p01 == Approx(1.0).margin(1e-15));
        CHECK(ps.p11 >= 0.0);
        CHECK(ps.p01 >= 0.0);

        // Chapman-Kolmogorov
        CHECK(std::abs(ps.p11 * pt.p11 + ps.p10 * pt.p01 - pst.p11) <= 1e-12);
        CHECK(std::abs(ps.p11 * pt.p10 + ps.p10 * pt.p00 - pst.p10) <= 1e-12);
        CHECK(std::abs(ps.p01 * pt.p11 + ps.p00 * pt.p01 - pst.p01) <= 1e-12);
        CHECK(std::abs(ps.p01 * pt.p10 + ps.p00 * pt.p00 - pst.p00) <= 1e-12);

        // p11 decreases and p01 increases towards the steady state
        const double pw = steady_state(rates).p_work;
        CHECK(pst.p11 <= ps.p11 + 1e-15);
        CHECK(pst.p01 >= ps.p01 - 1e-15);
        CHECK(pst.p11 >= pw - 1e-15);
        CHECK(pst.p01 <= pw + 1e-15);
    }
}

TEST_CASE("steady state", "[reliability]")
{
    CHECK(steady_state(0.3, 50.0).p_work == Approx(1.0 / 751.0).epsilon(1e-15));
    CHECK(steady_state(0.3, 50.0).p_work == Approx(1.3316e-3).epsilon(1e-4));
    CHECK(steady_state(1e-12, 50.0).p_work == Approx(1.0).epsilon(1e-8));
    CHECK(steady_state(0.0, 50.0).p_work == 1.0);

    // lambda0 L = mu0 / L  <=>  L = sqrt(mu0 / lambda0)
    const UnitRates unit{0.25, 4.0};
    const auto r = rates_for_length(unit, 4.0);
    CHECK(r.lambda == r.mu);
    CHECK(steady_state(r).p_work == 0.5);

    // the two forms agree
    for (double len : {0.5, 1.0, 7.0, 50.0})
    {
        const auto rr = rates_for_length({0.3, 1.0}, len);
        CHECK(steady_state(rr).p_work == Approx(steady_state(0.3, len).p_work).epsilon(1e-13));
    }
}

TEST_CASE("steady-state sampling", "[reliability]")
{
    RandomStream rng(11);
    for (int i = 0; i < 1000; ++i)
    {
        CHECK(sample_steady_state({1.0, 0.0}, rng) == LinkState::working);
        CHECK(sample_steady_state({0.0, 1.0}, rng) == LinkState::failed);
    }
    const int n = 1'000'000;
    int hits = 0;
    for (int i = 0; i < n; ++i)
        hits += sample_steady_state({0.5, 0.5}, rng) == LinkState::working;
    CHECK(std::abs(hits / double(n) - 0.5) <= 3 * std::sqrt(0.25 / n));
}

TEST_CASE("trajectory structure", "[reliability]")
{
    RandomStream rng(5);
    const ComponentRates rates{1.0, 2.0, 3.0};
    const auto traj = simulate_trajectory(rates, 10.0, rng);
    REQUIRE_FALSE(traj.sojourns.empty());
    double total = 0.0;
    for (std::size_t i = 0; i < traj.sojourns.size(); ++i)
    {
        total += traj.sojourns[i].duration;
        if (i > 0)
            CHECK(traj.sojourns[i].state != traj.sojourns[i - 1].state);
    }
    CHECK(total == Approx(10.0).epsilon(1e-12));
    CHECK(traj.sojourns.front().state == LinkState::working);
    CHECK(traj.state_at(0.0) == LinkState::working);
    CHECK(traj.state_at(10.0) == traj.sojourns.back().state);

    RandomStream rng2(5);
    const auto failed_start = simulate_trajectory(rates, 10.0, rng2, LinkState::failed);
    CHECK(failed_start.sojourns.front().state == LinkState::failed);
    CHECK_THROWS_AS(simulate_trajectory(rates, 0.0, rng2), std::domain_error);
}

TEST_CASE("long-run working fraction of a trajectory", "[reliability][statistical]")
{
    // Variance of the time average of a two-state chain over T is about 2 p (1 - p) / ((lambda + mu) T)
    for (const auto &rates : {ComponentRates{1.0, 1.0, 1.0}, rates_for_length({0.3, 1.0}, 50.0)})
    {
        const double relax = 1.0 / (rates.lambda + rates.mu);
        const double horizon = 1e6 * relax;
        RandomStream rng(99, 1);
        const auto traj = simulate_trajectory(rates, horizon, rng);
        const double p = steady_state(rates).p_work;
        const double sd = std::sqrt(2 * p * (1 - p) * relax / horizon);
        CHECK(std::abs(traj.time_working() / horizon - p) <= 4 * sd);
    }
}

TEST_CASE("empirical transition probabilities", "[reliability][statistical]")
{
    const ComponentRates rates{1.0, 1.5, 1.5};
    const double t = std::numbers::ln2 / 3.0;
    const std::vector<double> times{t};
    const std::uint64_t n = 1'000'000;
    const auto f = empirical_working_fraction(rates, LinkState::working, times, n, 42);
    CHECK(std::abs(f[0] - 0.75) <= 3 * std::sqrt(0.75 * 0.25 / n));
}

TEST_CASE("empirical fractions do not depend on the thread count", "[reliability]")
{
    const ComponentRates rates{1.0, 0.8, 1.3};
    const std::vector<double> times{0.1, 0.5, 2.0};
    const auto a = empirical_working_fraction(rates, LinkState::failed, times, 200'000, 3, 1);
    const auto b = empirical_working_fraction(rates, LinkState::failed, times, 200'000, 3, 4);
    CHECK(a == b);
}
