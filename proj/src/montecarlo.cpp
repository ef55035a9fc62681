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

#include "swan/montecarlo.hpp"
#include "swan/aggregation.hpp"
#include "swan/random.hpp"
#include "swan/segmented.hpp"
#include "parallel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace swan
{
    const char *to_string(Architecture arch)
    {
        switch (arch)
        {
        case Architecture::conventional:
            return "conventional";
        case Architecture::segment_selection:
            return "ss";
        case Architecture::segment_aggregation:
            return "sa";
        }
        return "unknown";
    }

    void McConfig::validate() const
    {
        if (trials == 0)
            throw std::invalid_argument("McConfig: trials must be positive");
        if (batch == 0)
            throw std::invalid_argument("McConfig: batch size must be positive");
    }

    McEstimate McEstimate::from_counts(std::uint64_t hits, std::uint64_t n)
    {
        McEstimate e;
        e.hits = hits;
        e.n = n;
        if (n == 0)
            return e;
        e.value = static_cast<double>(hits) / static_cast<double>(n);
        e.std_err = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(n));
        return e;
    }

    namespace
    {
        // Working probability of the one component that serves the user
        double single_link_probability(Architecture arch, const SystemParams &p)
        {
            if (arch == Architecture::conventional)
                return pnr_conventional(p.eps0, p.geo.region_x);
            return pnr_ss(p.eps0, p.geo.region_x / static_cast<double>(p.segments));
        }

        void check(const SystemParams &p, const McConfig &mc)
        {
            mc.validate();
            p.geo.validate();
            if (p.segments == 0)
                throw std::invalid_argument("SystemParams: segment count must be at least 1");
            if (!(p.eps0 >= 0.0) || !std::isfinite(p.eps0))
                throw std::invalid_argument("SystemParams: eps0 must be finite and non-negative");
        }
    }

    McEstimate estimate_pnr(Architecture arch, const SystemParams &params, const McConfig &mc)
    {
        check(params, mc);
        if (arch != Architecture::segment_aggregation)
        {
            const double p = single_link_probability(arch, params);
            const auto c = detail::run_batches(mc.trials, mc.batch, mc.threads, 1,
                                               [&](std::uint64_t b, std::uint64_t n, std::span<std::uint64_t> hits) {
                                                   RandomStream rng(mc.seed, b);
                                                   for (std::uint64_t i = 0; i < n; ++i)
                                                       hits[0] += rng.bernoulli(p);
                                               });
            return McEstimate::from_counts(c[0], mc.trials);
        }

        const std::size_t M = params.segments;
        const double p1 = pnr_ss(params.eps0, params.geo.region_x / static_cast<double>(M));
        const auto c = detail::run_batches(mc.trials, mc.batch, mc.threads, 1,
                                           [&](std::uint64_t b, std::uint64_t n, std::span<std::uint64_t> hits) {
                                               RandomStream rng(mc.seed, b);
                                               for (std::uint64_t i = 0; i < n; ++i)
                                               {
                                                   bool any = false;
                                                   // every segment is drawn so the stream layout does not depend on the outcome
                                                   for (std::size_t m = 0; m < M; ++m)
                                                       any = rng.bernoulli(p1) || any;
                                                   hits[0] += any;
                                               }
                                           });
        return McEstimate::from_counts(c[0], mc.trials);
    }

    OpEstimate estimate_op(Architecture arch, const SystemParams &params, const OutageSpec &spec,
                           const McConfig &mc, PlacementKind placement)
    {
        check(params, mc);
        const RfParams &rf = params.rf;
        const Geometry &geo = params.geo;
        const double tau = spec.threshold();

        if (arch != Architecture::segment_aggregation)
        {
            const double p = single_link_probability(arch, params);
            const bool rate_ok = snr_single_pa(geo.user.x, rf, geo) >= tau;
            const auto c = detail::run_batches(mc.trials, mc.batch, mc.threads, 1,
                                               [&](std::uint64_t b, std::uint64_t n, std::span<std::uint64_t> out) {
                                                   RandomStream rng(mc.seed, b);
                                                   for (std::uint64_t i = 0; i < n; ++i)
                                                       out[0] += !(rng.bernoulli(p) && rate_ok);
                                               });
            const auto e = McEstimate::from_counts(c[0], mc.trials);
            return {e, e};
        }

        const std::size_t M = params.segments;
        const auto wg = SegmentedWaveguide::over(geo, M);
        const PlacementSolution sol = placement == PlacementKind::phase_aligned ? place_antennas_sa(wg, rf, geo)
                                                                                : place_antennas_centered(wg, rf, geo);
        const double p1 = pnr_ss(params.eps0, wg.segment_length());
        const double scale = rf.power_w() * rf.eta() / rf.noise_w();

        // Per-segment phasors at the final positions and magnitudes at the initial ones
        std::vector<std::complex<double>> phasor(M);
        std::vector<double> gain = initial_position_gains(sol, geo);
        for (std::size_t m = 0; m < M; ++m)
        {
            const auto &s = sol.segments[m];
            const double lam = rf.wavelength();
            const double el = s.electrical_length;
            const double dx = s.position - geo.user.x;
            phasor[m] = std::polar(1.0 / std::sqrt(dx * dx + geo.cy()),
                                   -kTwoPi * distance_to_multiple(el - sol.reference_length, lam) / lam);
        }

        const auto c = detail::run_batches(
            mc.trials, mc.batch, mc.threads, 2,
            [&](std::uint64_t b, std::uint64_t n, std::span<std::uint64_t> out) {
                RandomStream rng(mc.seed, b);
                for (std::uint64_t i = 0; i < n; ++i)
                {
                    std::complex<double> coherent{0.0, 0.0};
                    double magnitude = 0.0;
                    std::size_t k = 0;
                    for (std::size_t m = 0; m < M; ++m)
                        if (rng.bernoulli(p1))
                        {
                            coherent += phasor[m];
                            magnitude += gain[m];
                            ++k;
                        }
                    if (k == 0)
                    {
                        out[0] += 1;
                        out[1] += 1;
                        continue;
                    }
                    const double inv_k = 1.0 / static_cast<double>(k);
                    out[0] += scale * std::norm(coherent) * inv_k < tau;
                    out[1] += scale * magnitude * magnitude * inv_k < tau;
                }
            });
        return {McEstimate::from_counts(c[0], mc.trials), McEstimate::from_counts(c[1], mc.trials)};
    }
}
