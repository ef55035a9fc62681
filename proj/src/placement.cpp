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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swan
{
    namespace
    {
        // Electrical length without the upstream check, continued linearly past the feed
        double raw_length(double psi, double feed, const Geometry &geo, const RfParams &rf)
        {
            const double dx = psi - geo.user.x;
            return std::sqrt(dx * dx + geo.cy()) + rf.n_eff() * (psi - feed);
        }

        // Least non-negative representative of a modulo period
        double positive_mod(double a, double period)
        {
            double r = a - period * std::floor(a / period);
            if (r >= period || r < 0.0)
                r = 0.0;
            return r;
        }

        SegmentPlacement make_segment(double feed, double initial, double position, double reference,
                                      double seg_len, const Geometry &geo, const RfParams &rf)
        {
            SegmentPlacement s;
            s.feed = feed;
            s.initial = initial;
            s.position = position;
            s.shift = std::abs(initial - position);
            s.electrical_length = raw_length(position, feed, geo, rf);
            s.residual = distance_to_multiple(s.electrical_length - reference, rf.wavelength());
            s.in_segment = position >= feed && position <= feed + seg_len;
            return s;
        }

        // Aligned position for one segment: closed form, checked against the root solve
        void align(SegmentPlacement &s, double target, ShiftDirection dir, double seg_len, const Geometry &geo,
                   const RfParams &rf, double reference)
        {
            const double closed = align_position_closed_form(target, s.feed, geo, rf);
            const double solved = align_position_root_solve(target, s.feed, s.initial, dir, geo, rf);
            const double gap = std::abs(closed - solved);
            const double x = gap > kAlignmentTolerance || !std::isfinite(closed) ? solved : closed;
            SegmentPlacement out = make_segment(s.feed, s.initial, x, reference, seg_len, geo, rf);
            out.closed_form_gap = std::isfinite(closed) ? gap : std::numeric_limits<double>::infinity();
            out.closed_form_agrees = std::isfinite(closed) && gap <= kAlignmentTolerance;
            s = out;
        }

        void check_spacing(PlacementSolution &sol, double delta)
        {
            const double tol = 1e-12 * std::max(1.0, delta);
            for (std::size_t m = 0; m + 1 < sol.segments.size(); ++m)
            {
                const double g = sol.segments[m + 1].position - sol.segments[m].position;
                if (g < delta - tol)
                {
                    sol.segments[m].spacing_ok = false;
                    sol.segments[m + 1].spacing_ok = false;
                }
            }
        }
    }

    double electrical_length(double psi, double feed, const Geometry &geo, const RfParams &rf)
    {
        if (psi < feed)
            throw std::domain_error("electrical_length: antenna lies upstream of its feed");
        return raw_length(psi, feed, geo, rf);
    }

    double align_position_closed_form(double target, double feed, const Geometry &geo, const RfParams &rf)
    {
        const double n = rf.n_eff();
        const double u = geo.user.x;
        const double cy = geo.cy();
        if (n == 1.0)
        {
            const double a = feed + target;
            return (a * a - (u * u + cy)) / (2.0 * (a - u));
        }
        const double b = target - n * (u - feed);
        const double disc = b * b + cy * (n * n - 1.0);
        return (feed * n * n + target * n - u - std::sqrt(disc)) / (n * n - 1.0);
    }

    double align_position_root_solve(double target, double feed, double start, ShiftDirection dir,
                                     const Geometry &geo, const RfParams &rf)
    {
        auto f = [&](double x) { return raw_length(x, feed, geo, rf) - target; };
        double lo = start, hi = start;
        double step = std::max(rf.wavelength(), 1e-6);
        if (dir == ShiftDirection::left)
        {
            for (int i = 0; f(lo) > 0.0; ++i, step *= 2.0)
            {
                if (i > 200)
                    throw std::domain_error("align_position_root_solve: no bracket to the left");
                hi = lo;
                lo -= step;
            }
        }
        else
        {
            for (int i = 0; f(hi) < 0.0; ++i, step *= 2.0)
            {
                if (i > 200)
                    throw std::domain_error("align_position_root_solve: no bracket to the right");
                lo = hi;
                hi += step;
            }
        }
        if (f(lo) == 0.0)
            return lo;
        if (f(hi) == 0.0)
            return hi;
        for (int i = 0; i < 200; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            (f(mid) < 0.0 ? lo : hi) = mid;
        }
        return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
    }

    bool PlacementSolution::feasible() const
    {
        return std::all_of(segments.begin(), segments.end(), [](const auto &s) { return s.feasible(); });
    }

    double PlacementSolution::min_gap() const
    {
        double g = std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m + 1 < segments.size(); ++m)
            g = std::min(g, segments[m + 1].position - segments[m].position);
        return g;
    }

    PlacementSolution place_antennas_sa(const SegmentedWaveguide &wg, const RfParams &rf, const Geometry &geo)
    {
        const std::size_t M = wg.segments();
        const double L = wg.segment_length();
        const double lam = rf.wavelength();
        const double delta = rf.min_spacing();

        PlacementSolution sol;
        sol.kind = PlacementKind::phase_aligned;
        sol.nearest = select_segment(geo.user.x, wg);
        sol.segments.resize(M);

        const std::size_t ms = sol.nearest;
        const double ux = geo.user.x;
        sol.reference_length = raw_length(ux, wg.feed(ms), geo, rf);
        sol.segments[ms] = make_segment(wg.feed(ms), ux, ux, sol.reference_length, L, geo, rf);

        for (std::size_t m = ms; m-- > 0;)
        {
            auto &s = sol.segments[m];
            s.feed = wg.feed(m);
            s.initial = std::min(wg.segment_end(m), sol.segments[m + 1].position - delta);
            const double d = raw_length(s.initial, s.feed, geo, rf);
            const double target = d - positive_mod(d - sol.reference_length, lam);
            align(s, target, ShiftDirection::left, L, geo, rf, sol.reference_length);
        }
        for (std::size_t m = ms + 1; m < M; ++m)
        {
            auto &s = sol.segments[m];
            s.feed = wg.feed(m);
            s.initial = std::max(s.feed, sol.segments[m - 1].position + delta);
            const double d = raw_length(s.initial, s.feed, geo, rf);
            const double target = d + positive_mod(sol.reference_length - d, lam);
            align(s, target, ShiftDirection::right, L, geo, rf, sol.reference_length);
        }

        check_spacing(sol, delta);
        return sol;
    }

    PlacementSolution place_antennas_centered(const SegmentedWaveguide &wg, const RfParams &rf, const Geometry &geo)
    {
        const std::size_t M = wg.segments();
        const double L = wg.segment_length();

        PlacementSolution sol;
        sol.kind = PlacementKind::centered;
        sol.nearest = select_segment(geo.user.x, wg);
        const double ref_pos = wg.feed(sol.nearest) + 0.5 * L;
        sol.reference_length = raw_length(ref_pos, wg.feed(sol.nearest), geo, rf);
        sol.segments.reserve(M);
        for (std::size_t m = 0; m < M; ++m)
        {
            const double pos = wg.feed(m) + 0.5 * L;
            sol.segments.push_back(make_segment(wg.feed(m), pos, pos, sol.reference_length, L, geo, rf));
        }
        check_spacing(sol, rf.min_spacing());
        return sol;
    }
}
