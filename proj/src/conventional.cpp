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

#include "swan/conventional.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swan
{
    OutageSpec::OutageSpec(double target_rate) : r0_(target_rate)
    {
        if (!(target_rate >= 0.0) || !std::isfinite(target_rate))
            throw std::invalid_argument("OutageSpec: target rate must be finite and non-negative");
        tau_ = std::expm1(target_rate * std::numbers::ln2);
    }

    double pnr_conventional(double eps0, double region_x)
    {
        if (!(eps0 >= 0.0) || !(region_x > 0.0))
            throw std::domain_error("pnr_conventional: need eps0 >= 0 and D_x > 0");
        return 1.0 / (eps0 * region_x * region_x + 1.0);
    }

    double op_conventional(double eps0, double region_x, double snr, const OutageSpec &spec)
    {
        const double pnr = pnr_conventional(eps0, region_x);
        return snr >= spec.threshold() ? 1.0 - pnr : 1.0;
    }
}
