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

#ifndef SWAN_RELIABILITY_HPP
#define SWAN_RELIABILITY_HPP

#include "swan/random.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace swan
{
    // Failure and repair rates per unit length. The failure rate of a component grows with
    // its length while its repair rate shrinks, so a component of length l has
    // (lambda0 * l, mu0 / l). Steady-state quantities depend only on eps0 = lambda0 / mu0.
    struct UnitRates
    {
        double lambda0; // failures per unit time per unit length
        double mu0;     // 1 / (MTTR per unit length)

        double eps0() const { return lambda0 / mu0; } // failure-repair rate ratio (F3R)
    };

    // Whole-component rates
    struct ComponentRates
    {
        double length = 1.0;
        double lambda = 1.0; // failure rate
        double mu = 1.0;     // repair rate
    };

    // Two-state CTMC transition probabilities at time t. State 1 is working, 0 is failed;
    // pij is Pr(state j at t | state i at 0).
    struct CtmcTransition
    {
        double t;
        double p11, p10, p00, p01;
    };

    struct SteadyState
    {
        double p_work;
        double p_fail;
    };

    enum class LinkState : std::uint8_t
    {
        failed = 0,
        working = 1
    };

    // One sojourn of a simulated trajectory
    struct Sojourn
    {
        LinkState state;
        double duration;
    };

    // Alternating working/failed sojourns covering [0, horizon]; the last sojourn is
    // truncated at the horizon.
    struct Trajectory
    {
        double horizon = 0.0;
        std::vector<Sojourn> sojourns;

        LinkState state_at(double t) const; // t in [0, horizon]
        double time_working() const;
    };

    double lifetime_cdf(double t, double lambda); // 1 - exp(-lambda t); t >= 0
    double mttf(double lambda);
    double mttr(double mu);

    ComponentRates rates_for_length(const UnitRates &unit, double length);

    CtmcTransition transition_probabilities(double t, const ComponentRates &rates);

    SteadyState steady_state(const ComponentRates &rates);

    // Working probability from the rate ratio alone: 1 / (eps0 length^2 + 1)
    SteadyState steady_state(double eps0, double length);

    // Exact-event-time simulation with Exp(lambda) working and Exp(mu) failed sojourns
    Trajectory simulate_trajectory(const ComponentRates &rates, double horizon, RandomStream &rng,
                                   LinkState initial = LinkState::working);

    // Draws a steady-state link state (working with probability p_work)
    LinkState sample_steady_state(const SteadyState &ss, RandomStream &rng);

    // Fraction of n_trajectories simulated trajectories that are working at each of the
    // given times. Trajectories are split into independent streams derived from seed;
    // the result does not depend on the thread count.
    std::vector<double> empirical_working_fraction(const ComponentRates &rates, LinkState initial,
                                                   std::span<const double> times,
                                                   std::uint64_t n_trajectories, std::uint64_t seed,
                                                   unsigned threads = 0);
}

#endif
