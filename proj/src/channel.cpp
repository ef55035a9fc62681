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

#include "swan/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace swan
{
    double wrap_to_period(double x, double period)
    {
        double r = distance_to_multiple(x, period);
        if (r < 0.0)
            r += period;
        if (r >= period) // r was -0.0 or rounding pushed it up
            r = 0.0;
        return r;
    }

    double distance_to_multiple(double x, double period)
    {
        return x - period * std::nearbyint(x / period);
    }

    double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
    double watt_to_dbm(double watt) { return 10.0 * std::log10(watt) + 30.0; }

    RfParams::RfParams(const RfConfig &config)
        : carrier_hz_(config.carrier_hz), n_eff_(config.n_eff), power_w_(config.power_w),
          noise_w_(config.noise_w), min_spacing_(config.min_spacing_m)
    {
        if (!(carrier_hz_ > 0.0) || !std::isfinite(carrier_hz_))
            throw std::invalid_argument("RfParams: carrier frequency must be positive");
        if (!(n_eff_ >= 1.0) || !std::isfinite(n_eff_))
            throw std::invalid_argument("RfParams: effective refractive index must be >= 1");
        if (!(power_w_ > 0.0))
            throw std::invalid_argument("RfParams: transmit power must be positive");
        if (!(noise_w_ > 0.0))
            throw std::invalid_argument("RfParams: noise power must be positive");

        lambda_ = kSpeedOfLight / carrier_hz_;
        lambda_g_ = lambda_ / n_eff_;
        k0_ = kTwoPi / lambda_;
        eta_ = kSpeedOfLight * kSpeedOfLight /
               (16.0 * std::numbers::pi * std::numbers::pi * carrier_hz_ * carrier_hz_);
        if (min_spacing_ < 0.0)
            min_spacing_ = 0.5 * lambda_;
    }

    void Geometry::validate() const
    {
        if (!(region_x > 0.0))
            throw std::invalid_argument("Geometry: region width D_x must be positive");
        if (!(height > 0.0))
            throw std::invalid_argument("Geometry: waveguide height must be positive");
        if (!(cy() > 0.0))
            throw std::invalid_argument("Geometry: c_y must be positive");
        if (user.x < first_feed_x || user.x > first_feed_x + region_x)
            throw std::invalid_argument("Geometry: user x-coordinate " + std::to_string(user.x) +
                                        " lies outside the waveguide span");
    }

    ComplexCoeff free_space_channel(double pa_x, const RfParams &rf, const Geometry &geo)
    {
        const double dx = pa_x - geo.user.x;
        const double r = std::sqrt(dx * dx + geo.cy());
        // k0 r = 2 pi r / lambda, reduced on the length scale first
        return {std::sqrt(rf.eta()) / r, wrap_angle(-kTwoPi * wrap_to_period(r, rf.wavelength()) / rf.wavelength())};
    }

    ComplexCoeff in_waveguide_phase(double feed_x, double pa_x, const RfParams &rf)
    {
        if (pa_x < feed_x)
            throw std::domain_error("in_waveguide_phase: antenna lies upstream of its feed");
        const double path = pa_x - feed_x;
        const double lg = rf.guided_wavelength();
        return {1.0, wrap_angle(-kTwoPi * wrap_to_period(path, lg) / lg)};
    }

    double snr_single_pa(double pa_x, const RfParams &rf, const Geometry &geo)
    {
        const double dx = pa_x - geo.user.x;
        return rf.power_w() * rf.eta() / (rf.noise_w() * (dx * dx + geo.cy()));
    }

    double rate(double snr)
    {
        if (snr < 0.0)
            throw std::domain_error("rate: negative SNR");
        return std::log2(1.0 + snr);
    }
}
