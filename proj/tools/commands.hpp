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

#ifndef SWAN_TOOLS_COMMANDS_HPP
#define SWAN_TOOLS_COMMANDS_HPP

#include "config.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace swancli
{
    // A library call failed on an otherwise valid config
    struct CommandError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    void pnr_sweep(const ExperimentConfig &cfg, std::ostream &out);
    void gain_sweep(const ExperimentConfig &cfg, std::ostream &out);
    void op_sweep(const ExperimentConfig &cfg, std::ostream &out);
    void placement_dump(const ExperimentConfig &cfg, std::ostream &out);

    // Writes the report and returns true when every check passed
    bool validate(const ExperimentConfig &cfg, std::ostream &out);

    // gnuplot script plotting the CSV written by a sweep command
    void write_plot_script(const std::string &command, const ExperimentConfig &cfg, const std::string &csv_path,
                           std::ostream &out);
}

#endif
