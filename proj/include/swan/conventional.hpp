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

#ifndef SWAN_CONVENTIONAL_HPP
#define SWAN_CONVENTIONAL_HPP

namespace swan
{
    // Target rate R0 and the matching SNR threshold tau = 2^R0 - 1
    class OutageSpec
    {
    public:
        explicit OutageSpec(double target_rate); // R0 >= 0, throws std::invalid_argument

        double target_rate() const { return r0_; }
        double threshold() const { return tau_; }

    private:
        double r0_, tau_;
    };

    // Monolithic waveguide of length D_x: PNR = 1 / (eps0 D_x^2 + 1)
    double pnr_conventional(double eps0, double region_x);

    // 1 - PNR when snr >= tau, 1 otherwise
    double op_conventional(double eps0, double region_x, double snr, const OutageSpec &spec);
}

#endif
