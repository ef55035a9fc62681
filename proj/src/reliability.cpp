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

#include "swan/reliability.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swan
{
    namespace
    {
        void require_rate(double rate, const char *what)
        {
            if (!(rate > 0.0) || !std::isfinite(rate))
                throw std::domain_error(std::string(what) + " must be a positive finite rate");
        }

        void require_time(double t)
        {
            if (!(t >= 0.0))
                throw std::domain_error("time must be non-negative");
        }

        void require_rates(const ComponentRates &rates)
        {
            require_rate(rates.lambda, "failure rate");
            require_rate(rates.mu, "repair rate");
        }
    }

    LinkState Trajectory::state_at(double t) const
    {
        double elapsed = 0.0;
        for (const auto &s : sojourns)
        {
            elapsed += s.duration;
            if (t < elapsed)
                return s.state;
        }
        return sojourns.empty() ? LinkState::working : sojourns.back().state;
    }

    double Trajectory::time_working() const
    {
        double total = 0.0;
        for (const auto &s : sojourns)
            if (s.state == LinkState::working)
                total += s.duration;
        return total;
    }

    double lifetime_cdf(double t, double lambda)
    {
        require_time(t);
        require_rate(lambda, "failure rate");
        return -std::expm1(-lambda * t);
    }

    double mttf(double lambda)
    {
        require_rate(lambda, "failure rate");
        return 1.0 / lambda;
    }

    double mttr(double mu)
    {
        require_rate(mu, "repair rate");
        return 1.0 / mu;
    }

    ComponentRates rates_for_length(const UnitRates &unit, double length)
    {
        require_rate(unit.lambda0, "unit failure rate");
        require_rate(unit.mu0, "unit repair rate");
        if (!(length > 0.0))
            throw std::domain_error("component length must be positive");
        return {length, unit.lambda0 * length, unit.mu0 / length};
    }

    CtmcTransition transition_probabilities(double t, const ComponentRates &rates)
    {
        require_time(t);
        require_rates(rates);
        const double total = rates.lambda + rates.mu;
        const double decay = std::exp(-total * t);
        const double work = rates.mu / total;
        const double fail = rates.lambda / total;

        CtmcTransition out{};
        out.t = t;
        out.p11 = work + fail * decay;
        out.p10 = 1.0 - out.p11;
        out.p00 = fail + work * decay;
        out.p01 = 1.0 - out.p00;
        return out;
    }

    SteadyState steady_state(const ComponentRates &rates)
    {
        require_rates(rates);
        const double p = rates.mu / (rates.lambda + rates.mu);
        return {p, 1.0 - p};
    }

    SteadyState steady_state(double eps0, double length)
    {
        if (!(eps0 >= 0.0))
            throw std::domain_error("failure-repair rate ratio must be non-negative");
        if (!(length > 0.0))
            throw std::domain_error("component length must be positive");
        const double p = 1.0 / (eps0 * length * length + 1.0);
        return {p, 1.0 - p};
    }

    Trajectory simulate_trajectory(const ComponentRates &rates, double horizon, RandomStream &rng,
                                   LinkState initial)
    {
        require_rates(rates);
        if (!(horizon > 0.0))
            throw std::domain_error("simulation horizon must be positive");

        Trajectory traj;
        traj.horizon = horizon;
        LinkState state = initial;
        double now = 0.0;
        while (now < horizon)
        {
            const double rate = state == LinkState::working ? rates.lambda : rates.mu;
            const double hold = rng.exponential(rate);
            const double clipped = std::min(hold, horizon - now);
            traj.sojourns.push_back({state, clipped});
            now += hold;
            state = state == LinkState::working ? LinkState::failed : LinkState::working;
        }
        return traj;
    }

    LinkState sample_steady_state(const SteadyState &ss, RandomStream &rng)
    {
        return rng.bernoulli(ss.p_work) ? LinkState::working : LinkState::failed;
    }

    std::vector<double> empirical_working_fraction(const ComponentRates &rates, LinkState initial,
                                                   std::span<const double> times,
                                                   std::uint64_t n_trajectories, std::uint64_t seed,
                                                   unsigned threads)
    {
        require_rates(rates);
        if (times.empty() || n_trajectories == 0)
            throw std::invalid_argument("empirical_working_fraction: need time points and trajectories");
        for (double t : times)
            require_time(t);
        const double horizon = std::max(*std::max_element(times.begin(), times.end()), 1e-300);

        constexpr std::uint64_t kBatch = 1u << 15;
        const auto counts = detail::run_batches(
            n_trajectories, kBatch, threads, times.size(),
            [&](std::uint64_t batch_index, std::uint64_t count, std::span<std::uint64_t> hits) {
                RandomStream rng(seed, batch_index);
                for (std::uint64_t i = 0; i < count; ++i)
                {
                    const Trajectory traj = simulate_trajectory(rates, horizon, rng, initial);
                    for (std::size_t k = 0; k < times.size(); ++k)
                        if (traj.state_at(times[k]) == LinkState::working)
                            ++hits[k];
                }
            });

        std::vector<double> fractions(times.size());
        for (std::size_t k = 0; k < times.size(); ++k)
            fractions[k] = static_cast<double>(counts[k]) / static_cast<double>(n_trajectories);
        return fractions;
    }
}
