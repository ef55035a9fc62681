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

#ifndef SWAN_RANDOM_HPP
#define SWAN_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace swan
{
    // Seeded random stream. A (seed, stream) pair identifies an independent sequence, so
    // parallel batches derive their generators as RandomStream(seed, batch_index).
    // Variate conversions are done here rather than through <random> distributions,
    // whose algorithms are implementation-defined.
    class RandomStream
    {
    public:
        explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

        std::uint64_t next_u64() { return engine_(); }

        // Uniform on [0, 1) with 53 random bits
        double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

        // Exp(rate) via inversion; rate > 0
        double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

        // true with probability p; p <= 0 never, p >= 1 always
        bool bernoulli(double p) { return uniform() < p; }

    private:
        std::mt19937_64 engine_;
    };
}

#endif
