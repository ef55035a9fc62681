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

#include "swan/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace swan
{
    namespace
    {
        void require_states(const PlacementSolution &sol, const SegmentStates &states)
        {
            if (states.size() != sol.segments.size())
                throw std::invalid_argument("segment state vector does not match the placement");
        }

        double inverse_distance(double x, const Geometry &geo)
        {
            const double dx = x - geo.user.x;
            return 1.0 / std::sqrt(dx * dx + geo.cy());
        }

        // P eta / (M-hat sigma^2) (sum of 1/r)^2 over working segments at the given positions
        template <typename Pos>
        double magnitude_snr(const PlacementSolution &sol, const SegmentStates &states, const RfParams &rf,
                             const Geometry &geo, Pos pos)
        {
            require_states(sol, states);
            double sum = 0.0;
            std::size_t k = 0;
            for (std::size_t m = 0; m < sol.segments.size(); ++m)
                if (states.working(m))
                {
                    sum += inverse_distance(pos(sol.segments[m]), geo);
                    ++k;
                }
            if (k == 0)
                return 0.0;
            return rf.power_w() * rf.eta() * sum * sum / (static_cast<double>(k) * rf.noise_w());
        }

        // Compensated summation
        struct Neumaier
        {
            double sum = 0.0, c = 0.0;
            void add(double x)
            {
                const double t = sum + x;
                if (std::abs(sum) >= std::abs(x))
                    c += (sum - t) + x;
                else
                    c += (x - t) + sum;
                sum = t;
            }
            double value() const { return sum + c; }
        };

        // All subset sums of g[first, first + n), grouped by subset size and sorted
        std::vector<std::vector<double>> subset_sums(const std::vector<double> &g, std::size_t first, std::size_t n)
        {
            std::vector<std::vector<double>> by_size(n + 1);
            const std::uint64_t total = std::uint64_t{1} << n;
            for (std::uint64_t mask = 0; mask < total; ++mask)
            {
                double s = 0.0;
                unsigned k = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if ((mask >> i) & 1u)
                    {
                        s += g[first + i];
                        ++k;
                    }
                by_size[k].push_back(s);
            }
            for (auto &v : by_size)
                std::sort(v.begin(), v.end());
            return by_size;
        }

        // OP as sum over subset sizes k of N_k P1^k P0^(M-k), where N_k counts subsets I with
        // |I| = k that are in outage: k == 0, or sum of g over I < threshold(k).
        template <typename Threshold>
        double enumerate_outage(const std::vector<double> &g, double p_work, Threshold threshold)
        {
            const std::size_t M = g.size();
            if (M > kMaxBruteForceSegments)
                throw std::domain_error("brute-force outage enumeration supports at most 24 segments");

            const std::size_t na = M / 2;
            const std::size_t nb = M - na;
            const auto a = subset_sums(g, 0, na);
            const auto b = subset_sums(g, na, nb);

            std::vector<std::uint64_t> outage(M + 1, 0);
            for (std::size_t ka = 0; ka <= na; ++ka)
                for (std::size_t kb = 0; kb <= nb; ++kb)
                {
                    const std::size_t k = ka + kb;
                    if (k == 0)
                    {
                        outage[0] = 1;
                        continue;
                    }
                    const double t = threshold(k);
                    const auto &bs = b[kb];
                    for (double sa : a[ka])
                    {
                        // number of b with sa + b < t
                        const auto it = std::partition_point(bs.begin(), bs.end(),
                                                             [&](double sb) { return sa + sb < t; });
                        outage[k] += static_cast<std::uint64_t>(it - bs.begin());
                    }
                }

            const double p_fail = 1.0 - p_work;
            Neumaier acc;
            for (std::size_t k = 0; k <= M; ++k)
            {
                if (outage[k] == 0)
                    continue;
                const double pk = std::pow(p_work, static_cast<double>(k)) *
                                  std::pow(p_fail, static_cast<double>(M - k));
                acc.add(static_cast<double>(outage[k]) * pk);
            }
            return std::clamp(acc.value(), 0.0, 1.0);
        }

        double segment_work_probability(double eps0, const SegmentedWaveguide &wg)
        {
            if (!(eps0 >= 0.0) || !std::isfinite(eps0))
                throw std::domain_error("failure-repair rate ratio must be finite and non-negative");
            const double L = wg.segment_length();
            return 1.0 / (eps0 * L * L + 1.0);
        }

        void require_matching(const PlacementSolution &sol, const SegmentedWaveguide &wg)
        {
            if (sol.segments.size() != wg.segments())
                throw std::invalid_argument("placement does not match the waveguide segment count");
        }
    }

    double snr_sa_exact(const PlacementSolution &sol, const SegmentStates &states, const RfParams &rf,
                        const Geometry &geo)
    {
        require_states(sol, states);
        const double lam = rf.wavelength();
        std::complex<double> sum{0.0, 0.0};
        std::size_t k = 0;
        for (std::size_t m = 0; m < sol.segments.size(); ++m)
        {
            if (!states.working(m))
                continue;
            const auto &s = sol.segments[m];
            // Total phase is -2 pi (electrical length) / lambda; a common offset drops out of |.|
            const double el = s.electrical_length;
            const double phase = -kTwoPi * distance_to_multiple(el - sol.reference_length, lam) / lam;
            sum += std::polar(inverse_distance(s.position, geo), phase);
            ++k;
        }
        if (k == 0)
            return 0.0;
        return rf.power_w() * rf.eta() * std::norm(sum) / (static_cast<double>(k) * rf.noise_w());
    }

    double snr_sa_aligned(const PlacementSolution &sol, const SegmentStates &states, const RfParams &rf,
                          const Geometry &geo)
    {
        return magnitude_snr(sol, states, rf, geo, [](const SegmentPlacement &s) { return s.position; });
    }

    double snr_sa_approx(const PlacementSolution &sol, const SegmentStates &states, const RfParams &rf,
                         const Geometry &geo)
    {
        return magnitude_snr(sol, states, rf, geo, [](const SegmentPlacement &s) { return s.initial; });
    }

    std::vector<double> initial_position_gains(const PlacementSolution &sol, const Geometry &geo)
    {
        std::vector<double> g;
        g.reserve(sol.segments.size());
        for (const auto &s : sol.segments)
            g.push_back(inverse_distance(s.initial, geo));
        return g;
    }

    double unit_outage_threshold(const RfParams &rf, const OutageSpec &spec)
    {
        return std::sqrt(spec.threshold() * rf.noise_w() / (rf.power_w() * rf.eta()));
    }

    double op_sa_bruteforce(const PlacementSolution &sol, double eps0, const SegmentedWaveguide &wg,
                            const RfParams &rf, const Geometry &geo, const OutageSpec &spec)
    {
        require_matching(sol, wg);
        const double t = unit_outage_threshold(rf, spec);
        return enumerate_outage(initial_position_gains(sol, geo), segment_work_probability(eps0, wg),
                                [t](std::size_t k) { return std::sqrt(static_cast<double>(k)) * t; });
    }

    double op_sa_bound_bruteforce(const PlacementSolution &sol, double eps0, const SegmentedWaveguide &wg,
                                  const RfParams &rf, const Geometry &geo, const OutageSpec &spec)
    {
        require_matching(sol, wg);
        const double t = std::sqrt(static_cast<double>(wg.segments())) * unit_outage_threshold(rf, spec);
        return enumerate_outage(initial_position_gains(sol, geo), segment_work_probability(eps0, wg),
                                [t](std::size_t) { return t; });
    }

    SaMoments sa_moments(const PlacementSolution &sol, double eps0, const SegmentedWaveguide &wg,
                         const Geometry &geo)
    {
        require_matching(sol, wg);
        const double p1 = segment_work_probability(eps0, wg);
        const double p0 = 1.0 - p1;
        Neumaier s1, s2;
        for (double g : initial_position_gains(sol, geo))
        {
            s1.add(g);
            s2.add(g * g);
        }
        return {p1 * s1.value(), p0 * p1 * s2.value()};
    }

    SaMoments sa_moments_symmetric(double eps0, const SegmentedWaveguide &wg, const Geometry &geo)
    {
        const std::size_t M = wg.segments();
        if (M % 2 == 0)
            throw std::domain_error("sa_moments_symmetric: segment count must be odd");
        const double L = wg.segment_length();
        const double center = wg.feed(M / 2) + 0.5 * L;
        if (std::abs(geo.user.x - center) > 1e-9 * std::max(1.0, std::abs(center)))
            throw std::domain_error("sa_moments_symmetric: user must sit under the middle segment's center");

        const double p1 = segment_work_probability(eps0, wg);
        const double p0 = 1.0 - p1;
        const double root_cy = std::sqrt(geo.cy());
        const double arg = L * static_cast<double>(M - 1) / (2.0 * root_cy);
        const double mean = p1 * (1.0 / root_cy + 2.0 / L * std::asinh(arg));
        const double var = p0 * p1 / root_cy * (1.0 / root_cy + 2.0 / L * std::atan(arg));
        return {mean, var};
    }

    double standard_normal_cdf(double x)
    {
        return 0.5 * std::erfc(-x / std::numbers::sqrt2);
    }

    double op_sa_gaussian_bound(const SaMoments &moments, std::size_t segments, const RfParams &rf,
                                const OutageSpec &spec)
    {
        if (segments == 0)
            throw std::domain_error("op_sa_gaussian_bound: segment count must be at least 1");
        if (!(moments.variance >= 0.0))
            throw std::domain_error("op_sa_gaussian_bound: negative variance");
        const double t = std::sqrt(static_cast<double>(segments)) * unit_outage_threshold(rf, spec);
        if (moments.variance == 0.0)
            return moments.mean < t ? 1.0 : 0.0;
        return standard_normal_cdf((t - moments.mean) / std::sqrt(moments.variance));
    }
}
