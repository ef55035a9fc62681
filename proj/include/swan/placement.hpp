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

#ifndef SWAN_PLACEMENT_HPP
#define SWAN_PLACEMENT_HPP

#include "swan/channel.hpp"
#include "swan/segmented.hpp"

#include <cstddef>
#include <vector>

namespace swan
{
    // Free-space distance plus n_eff-weighted in-waveguide distance from the feed:
    // sqrt((psi - u_x)^2 + c_y) + n_eff (psi - feed). Throws std::domain_error if psi < feed.
    double electrical_length(double psi, double feed, const Geometry &geo, const RfParams &rf);

    enum class ShiftDirection
    {
        left,
        right
    };

    // Position x with electrical_length(x, feed) == target, from the quadratic closed form.
    // For n_eff > 1 the smaller root is the only one with a non-negative free-space term;
    // n_eff == 1 degenerates to a linear equation.
    double align_position_closed_form(double target, double feed, const Geometry &geo, const RfParams &rf);

    // Same position from a bracketed bisection on the (strictly increasing) electrical
    // length, starting at start and expanding in the given direction
    double align_position_root_solve(double target, double feed, double start, ShiftDirection dir,
                                     const Geometry &geo, const RfParams &rf);

    struct SegmentPlacement
    {
        double feed = 0.0;            // psi_0^m
        double initial = 0.0;         // psi-hat^m, before the phase-alignment shift
        double shift = 0.0;           // nu^m >= 0, moved away from the nearest segment
        double position = 0.0;        // psi^m
        double electrical_length = 0.0; // continued linearly upstream of the feed on infeasible rows
        double residual = 0.0;        // signed distance of (electrical length - reference) to a multiple of lambda
        double closed_form_gap = 0.0; // |closed form - root solve| [m]
        bool closed_form_agrees = true;
        bool in_segment = true;       // psi^m within [feed, feed + L]
        bool spacing_ok = true;       // |psi^m - neighbours| >= Delta
        bool feasible() const { return in_segment && spacing_ok; }
    };

    enum class PlacementKind
    {
        phase_aligned, // nearest segment under the user, the rest shifted for constructive combining
        centered       // every antenna at its segment center, no alignment
    };

    struct PlacementSolution
    {
        PlacementKind kind = PlacementKind::phase_aligned;
        std::size_t nearest = 0; // m*, 0-based
        double reference_length = 0.0; // electrical length of the nearest segment's antenna
        std::vector<SegmentPlacement> segments;

        bool feasible() const;
        double min_gap() const; // smallest spacing between adjacent antennas (inf for M = 1)
    };

    // Closed-form agreement tolerance between the quadratic solution and the root solve
    inline constexpr double kAlignmentTolerance = 1e-10; // [m]

    // Phase-aligned placement. The nearest segment's antenna sits at u_x; moving outwards,
    // each antenna starts at the closest admissible point to the user (segment end or
    // Delta from its inner neighbour) and is pushed outwards by the smallest nu that makes
    // its electrical length congruent to the reference modulo lambda. Infeasible segments
    // are flagged, never clamped. When the closed form and the root solve disagree by more
    // than kAlignmentTolerance, the root solve is used and closed_form_agrees is cleared.
    PlacementSolution place_antennas_sa(const SegmentedWaveguide &wg, const RfParams &rf, const Geometry &geo);

    // Unoptimized baseline: psi^m = feed + L / 2
    PlacementSolution place_antennas_centered(const SegmentedWaveguide &wg, const RfParams &rf, const Geometry &geo);
}

#endif
