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

#ifndef SWAN_AGGREGATION_HPP
#define SWAN_AGGREGATION_HPP

#include "swan/channel.hpp"
#include "swan/conventional.hpp"
#include "swan/placement.hpp"
#include "swan/segmented.hpp"

#include <cstddef>
#include <vector>

namespace swan
{
    // Segment aggregation: all working segments are summed into one RF chain and the noise
    // power grows with the number of working segments. Every SNR below is 0 when no
    // segment works; that state always counts as zero rate and as outage.

    // Coherent sum with full propagation phases at the final positions
    double snr_sa_exact(const PlacementSolution &sol, const SegmentStates &states, const RfParams &rf,
                        const Geometry &geo);

    // Magnitude-only sum at the final (shifted) positions; equal to snr_sa_exact up to the
    // alignment residual on a phase-aligned placement
    double snr_sa_aligned(const PlacementSolution &sol, const SegmentStates &states, const RfParams &rf,
                          const Geometry &geo);

    // Magnitude-only sum at the initial positions (shift neglected)
    double snr_sa_approx(const PlacementSolution &sol, const SegmentStates &states, const RfParams &rf,
                         const Geometry &geo);

    // Per-segment gains 1 / sqrt((psi-hat^m - u_x)^2 + c_y) at the initial positions
    std::vector<double> initial_position_gains(const PlacementSolution &sol, const Geometry &geo);

    // sqrt(tau) sigma / sqrt(P eta): Lambda must exceed this times sqrt(M-hat) to avoid outage
    double unit_outage_threshold(const RfParams &rf, const OutageSpec &spec);

    inline constexpr std::size_t kMaxBruteForceSegments = 24;

    // Exact OP by enumeration of all 2^M working subsets with the magnitude-only criterion
    // at the initial positions. Throws std::domain_error for M > kMaxBruteForceSegments.
    double op_sa_bruteforce(const PlacementSolution &sol, double eps0, const SegmentedWaveguide &wg,
                            const RfParams &rf, const Geometry &geo, const OutageSpec &spec);

    // Pr(Lambda_M < sqrt(M tau) sigma / sqrt(P eta)) by enumeration: the OP upper bound
    // obtained by replacing M-hat with M. The empty subset counts as outage.
    double op_sa_bound_bruteforce(const PlacementSolution &sol, double eps0, const SegmentedWaveguide &wg,
                                  const RfParams &rf, const Geometry &geo, const OutageSpec &spec);

    struct SaMoments
    {
        double mean;     // E{Lambda_M}
        double variance; // V{Lambda_M}
    };

    SaMoments sa_moments(const PlacementSolution &sol, double eps0, const SegmentedWaveguide &wg,
                         const Geometry &geo);

    // asinh/atan closed forms for odd M with the user under the center of the middle
    // segment; throws std::domain_error otherwise
    SaMoments sa_moments_symmetric(double eps0, const SegmentedWaveguide &wg, const Geometry &geo);

    // Gaussian moment-matching approximation of the OP upper bound,
    // Phi((sqrt(M tau) sigma / sqrt(P eta) - mean) / stddev)
    double op_sa_gaussian_bound(const SaMoments &moments, std::size_t segments, const RfParams &rf,
                                const OutageSpec &spec);

    double standard_normal_cdf(double x);
}

#endif
