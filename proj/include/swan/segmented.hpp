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

#ifndef SWAN_SEGMENTED_HPP
#define SWAN_SEGMENTED_HPP

#include "swan/channel.hpp"
#include "swan/conventional.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace swan
{
    // M end-to-end segments of equal length L covering [first_feed, first_feed + M L].
    // Each segment is fed at its left end. Segment indices are 0-based.
    class SegmentedWaveguide
    {
    public:
        SegmentedWaveguide(std::size_t segments, double region_x, double first_feed_x);

        // Segmentation of the region described by geo
        static SegmentedWaveguide over(const Geometry &geo, std::size_t segments);

        std::size_t segments() const { return segments_; }
        double segment_length() const { return length_; }
        double region_x() const { return length_ * static_cast<double>(segments_); }
        double first_feed() const { return first_feed_; }

        double feed(std::size_t m) const { return first_feed_ + static_cast<double>(m) * length_; }
        double segment_end(std::size_t m) const { return feed(m) + length_; }

    private:
        std::size_t segments_;
        double length_;
        double first_feed_;
    };

    // Working/failed state of every segment
    class SegmentStates
    {
    public:
        explicit SegmentStates(std::size_t segments, bool working = false) : b_(segments, working ? 1 : 0) {}
        explicit SegmentStates(std::vector<std::uint8_t> states) : b_(std::move(states)) {}

        // Subset encoded as a bit mask (bit m set = segment m working); segments <= 64
        static SegmentStates from_mask(std::uint64_t mask, std::size_t segments);

        std::size_t size() const { return b_.size(); }
        bool working(std::size_t m) const { return b_[m] != 0; }
        void set(std::size_t m, bool working) { b_[m] = working ? 1 : 0; }
        std::size_t working_count() const; // M-hat

    private:
        std::vector<std::uint8_t> b_;
    };

    // Index of the segment nearest the user: ceil((u_x - psi_0^1) / L) in 1-based terms,
    // returned 0-based. A user exactly on a boundary belongs to the lower segment, and
    // u_x = psi_0^1 maps to segment 0. Throws std::domain_error outside the region.
    std::size_t select_segment(double user_x, const SegmentedWaveguide &wg);

    // Segment selection (SS): only the nearest segment is connected.
    double pnr_ss(double eps0, double segment_length);
    double op_ss(double eps0, double segment_length, double snr, const OutageSpec &spec);

    // Segment aggregation (SA): non-zero rate while any segment works.
    // 1 - (eps0 D_x^2 / (eps0 D_x^2 + M^2))^M
    double pnr_sa(double eps0, double region_x, std::size_t segments);
    // 1 - pnr_sa without the cancellation: stays resolvable after pnr_sa rounds to 1
    double pnr_sa_complement(double eps0, double region_x, std::size_t segments);

    // PNR gains relative to a monolithic waveguide over the same region
    double gain_ss(double eps0, double region_x, std::size_t segments);
    double gain_sa(double eps0, double region_x, std::size_t segments);

    // Distance of each gain to its common limit 1 + eps0 D_x^2 as M grows, evaluated
    // without cancellation
    double gain_ss_gap(double eps0, double region_x, std::size_t segments);
    double gain_sa_gap(double eps0, double region_x, std::size_t segments);

    struct AsymptoticCoeffs
    {
        double tau_dx;   // (2 / D_x) asinh(D_x / (2 sqrt(c_y)))
        double kappa_dx; // (4 eps0 D_x / sqrt(c_y)) atan(D_x / (2 sqrt(c_y)))
    };

    AsymptoticCoeffs sa_asymptotic_coeffs(double eps0, double region_x, const Geometry &geo);
}

#endif
