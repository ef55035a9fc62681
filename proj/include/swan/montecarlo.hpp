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

#ifndef SWAN_MONTECARLO_HPP
#define SWAN_MONTECARLO_HPP

#include "swan/channel.hpp"
#include "swan/conventional.hpp"
#include "swan/placement.hpp"

#include <cstddef>
#include <cstdint>

namespace swan
{
    enum class Architecture
    {
        conventional,        // one monolithic waveguide over D_x
        segment_selection,   // SS
        segment_aggregation  // SA
    };

    const char *to_string(Architecture arch);

    // Trials are cut into batches of `batch` (the last one may be shorter). Batch i draws
    // from RandomStream(seed, i), so estimates depend on (trials, seed, batch) only, never
    // on the number of worker threads.
    struct McConfig
    {
        std::uint64_t trials = 1'000'000;
        std::uint64_t seed = 1;
        std::uint64_t batch = 1u << 16;
        unsigned threads = 0; // 0 = hardware concurrency

        void validate() const; // throws std::invalid_argument
    };

    struct McEstimate
    {
        double value = 0.0;   // fraction of trials with the event
        double std_err = 0.0; // sqrt(value (1 - value) / n)
        std::uint64_t hits = 0;
        std::uint64_t n = 0;

        static McEstimate from_counts(std::uint64_t hits, std::uint64_t n);
    };

    // Everything needed to evaluate one architecture in steady state
    struct SystemParams
    {
        RfParams rf{};
        Geometry geo{};
        double eps0 = 0.3;
        std::size_t segments = 1; // ignored by the conventional architecture
    };

    // Fraction of trials with a non-zero rate
    McEstimate estimate_pnr(Architecture arch, const SystemParams &params, const McConfig &mc);

    struct OpEstimate
    {
        McEstimate exact;     // SA: full-phase coherent SNR at the final positions
        McEstimate magnitude; // SA: magnitude-only SNR at the initial positions
    };

    // Fraction of trials with rate below R0. Single-antenna architectures place the antenna
    // at u_x, so both fields agree for them. A trial with no working antenna is an outage
    // for every R0.
    OpEstimate estimate_op(Architecture arch, const SystemParams &params, const OutageSpec &spec,
                           const McConfig &mc, PlacementKind placement = PlacementKind::phase_aligned);
}

#endif
