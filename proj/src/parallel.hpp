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

#ifndef SWAN_SRC_PARALLEL_HPP
#define SWAN_SRC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace swan::detail
{
    // Splits `total` work items into batches of `batch_size` and calls
    // fn(batch_index, count, counters) for each, where counters is a zeroed span of
    // n_counters event tallies private to that batch. Returns the per-counter sums.
    // Integer tallies make the reduction independent of scheduling.
    template <typename Fn>
    std::vector<std::uint64_t> run_batches(std::uint64_t total, std::uint64_t batch_size, unsigned threads,
                                           std::size_t n_counters, Fn &&fn)
    {
        const std::uint64_t n_batches = (total + batch_size - 1) / batch_size;
        std::vector<std::uint64_t> tallies(n_batches * n_counters, 0);

        auto work = [&](std::uint64_t b) {
            const std::uint64_t count = std::min(batch_size, total - b * batch_size);
            fn(b, count, std::span<std::uint64_t>(tallies.data() + b * n_counters, n_counters));
        };

        unsigned n_threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
        n_threads = static_cast<unsigned>(std::min<std::uint64_t>(n_threads, n_batches));

        if (n_threads <= 1)
        {
            for (std::uint64_t b = 0; b < n_batches; ++b)
                work(b);
        }
        else
        {
            std::atomic<std::uint64_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < n_threads; ++t)
                pool.emplace_back([&] {
                    for (std::uint64_t b = next++; b < n_batches; b = next++)
                    {
                        try
                        {
                            work(b);
                        }
                        catch (...)
                        {
                            std::lock_guard lock(failure_mutex);
                            if (!failure)
                                failure = std::current_exception();
                        }
                    }
                });
            pool.clear();
            if (failure)
                std::rethrow_exception(failure);
        }

        std::vector<std::uint64_t> sums(n_counters, 0);
        for (std::uint64_t b = 0; b < n_batches; ++b)
            for (std::size_t k = 0; k < n_counters; ++k)
                sums[k] += tallies[b * n_counters + k];
        return sums;
    }
}

#endif
