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

#ifndef SWAN_TOOLS_CONFIG_HPP
#define SWAN_TOOLS_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace swancli
{
    struct ConfigError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    enum class Axis
    {
        segments,
        region_x,
        eps0
    };

    enum class Hold
    {
        segments,      // sweeping D_x keeps M fixed
        segment_length // sweeping D_x keeps L fixed, M = D_x / L
    };

    enum class R0Rule
    {
        fraction, // R0 = r0_factor * log2(1 + gamma_M)
        absolute  // R0 = r0
    };

    struct Range
    {
        double start = 0.0;
        double stop = 0.0;
        double step = 1.0;
        bool geometric = false; // step is a multiplier

        std::vector<double> values() const;
        std::string str() const;
        static Range parse(const std::string &text); // "a:b:s" or "a:b:xk"
    };

    struct ExperimentConfig
    {
        // RF
        double carrier_hz = 28e9;
        double n_eff = 1.4;
        double power_dbm = 10.0;
        double noise_dbm = -90.0;
        double min_spacing_m = -1.0; // negative: lambda / 2

        // geometry
        double region_x = 50.0;
        double region_y = 20.0;
        double height = 3.0;
        double user_x = 0.0, user_y = 0.0, user_z = 0.0;
        std::optional<double> first_feed_x; // empty: -D_x / 2

        // reliability
        double eps0 = 0.3;
        double mu0 = 1.0; // unit repair rate; lambda0 = eps0 mu0

        // waveguide
        std::uint64_t segments = 10;
        double segment_length = 1.0; // used when hold = L
        Hold hold = Hold::segments;

        // sweep
        Axis axis = Axis::segments;
        std::optional<Range> range; // empty: command default

        // protocols shown in sweeps
        bool conventional = true, ss = true, sa = true;

        // outage target
        R0Rule r0_rule = R0Rule::fraction;
        double r0_factor = 0.9;
        double r0 = 1.0;

        // Monte Carlo
        std::uint64_t trials = 1'000'000;
        std::uint64_t seed = 1;
        std::uint64_t batch = 1u << 16;
        unsigned threads = 0;
        bool mc = true;

        double power_w() const;
        double noise_w() const;
        double lambda0() const { return eps0 * mu0; }

        void set(const std::string &key, const std::string &value); // throws ConfigError
        void validate() const;                                       // throws ConfigError

        // Canonical key=value listing; also the hash input
        std::string dump() const;
        std::uint64_t hash() const;
    };

    ExperimentConfig parse_config(std::istream &in, ExperimentConfig base = {});
    ExperimentConfig load_config(const std::string &path, ExperimentConfig base = {});

    const char *to_string(Axis axis);
}

#endif
