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

#include "swan/segmented.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swan
{
    namespace
    {
        void require_eps(double eps0)
        {
            if (!(eps0 >= 0.0) || !std::isfinite(eps0))
                throw std::domain_error("failure-repair rate ratio must be finite and non-negative");
        }

        void require_segments(std::size_t segments)
        {
            if (segments == 0)
                throw std::domain_error("segment count must be at least 1");
        }

        void require_width(double region_x)
        {
            if (!(region_x > 0.0))
                throw std::domain_error("region width must be positive");
        }
    }

    SegmentedWaveguide::SegmentedWaveguide(std::size_t segments, double region_x, double first_feed_x)
        : segments_(segments), length_(0.0), first_feed_(first_feed_x)
    {
        require_segments(segments);
        require_width(region_x);
        length_ = region_x / static_cast<double>(segments);
    }

    SegmentedWaveguide SegmentedWaveguide::over(const Geometry &geo, std::size_t segments)
    {
        return SegmentedWaveguide(segments, geo.region_x, geo.first_feed_x);
    }

    SegmentStates SegmentStates::from_mask(std::uint64_t mask, std::size_t segments)
    {
        if (segments > 64)
            throw std::domain_error("SegmentStates::from_mask supports at most 64 segments");
        SegmentStates s(segments);
        for (std::size_t m = 0; m < segments; ++m)
            s.set(m, ((mask >> m) & 1u) != 0);
        return s;
    }

    std::size_t SegmentStates::working_count() const
    {
        std::size_t n = 0;
        for (auto v : b_)
            n += v != 0;
        return n;
    }

    std::size_t select_segment(double user_x, const SegmentedWaveguide &wg)
    {
        const double offset = user_x - wg.first_feed();
        if (offset < 0.0 || offset > wg.region_x())
            throw std::domain_error("select_segment: user x-coordinate " + std::to_string(user_x) +
                                    " is outside the segmented waveguide");
        const double ceil_index = std::ceil(offset / wg.segment_length()); // 1-based
        const auto m = static_cast<std::size_t>(ceil_index);
        if (m == 0)
            return 0;
        return std::min(m, wg.segments()) - 1;
    }

    double pnr_ss(double eps0, double segment_length)
    {
        require_eps(eps0);
        if (!(segment_length > 0.0))
            throw std::domain_error("segment length must be positive");
        return 1.0 / (eps0 * segment_length * segment_length + 1.0);
    }

    double op_ss(double eps0, double segment_length, double snr, const OutageSpec &spec)
    {
        const double pnr = pnr_ss(eps0, segment_length);
        return snr >= spec.threshold() ? 1.0 - pnr : 1.0;
    }

    double pnr_sa(double eps0, double region_x, std::size_t segments)
    {
        require_eps(eps0);
        require_width(region_x);
        require_segments(segments);
        const double m = static_cast<double>(segments);
        const double length = region_x / m;
        return -std::expm1(m * std::log1p(-1.0 / (eps0 * length * length + 1.0)));
    }

    double pnr_sa_complement(double eps0, double region_x, std::size_t segments)
    {
        require_eps(eps0);
        require_width(region_x);
        require_segments(segments);
        // q^M for q = 1 - 1 / (eps0 L^2 + 1), via log1p to keep precision when q -> 1
        const double m = static_cast<double>(segments);
        const double length = region_x / m;
        return std::exp(m * std::log1p(-1.0 / (eps0 * length * length + 1.0)));
    }

    double gain_ss(double eps0, double region_x, std::size_t segments)
    {
        require_eps(eps0);
        require_width(region_x);
        require_segments(segments);
        const double e = eps0 * region_x * region_x;
        const double m2 = static_cast<double>(segments) * static_cast<double>(segments);
        return (e * m2 + m2) / (e + m2);
    }

    double gain_sa(double eps0, double region_x, std::size_t segments)
    {
        return (1.0 + eps0 * region_x * region_x) * pnr_sa(eps0, region_x, segments);
    }

    double gain_ss_gap(double eps0, double region_x, std::size_t segments)
    {
        require_eps(eps0);
        require_width(region_x);
        require_segments(segments);
        const double e = eps0 * region_x * region_x;
        const double m2 = static_cast<double>(segments) * static_cast<double>(segments);
        return (e + 1.0) * e / (e + m2);
    }

    double gain_sa_gap(double eps0, double region_x, std::size_t segments)
    {
        require_eps(eps0);
        require_width(region_x);
        require_segments(segments);
        return (1.0 + eps0 * region_x * region_x) * pnr_sa_complement(eps0, region_x, segments);
    }

    AsymptoticCoeffs sa_asymptotic_coeffs(double eps0, double region_x, const Geometry &geo)
    {
        require_eps(eps0);
        require_width(region_x);
        const double root_cy = std::sqrt(geo.cy());
        const double arg = region_x / (2.0 * root_cy);
        return {2.0 / region_x * std::asinh(arg), 4.0 * eps0 * region_x / root_cy * std::atan(arg)};
    }
}
