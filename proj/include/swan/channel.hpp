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

#ifndef SWAN_CHANNEL_HPP
#define SWAN_CHANNEL_HPP

#include <complex>
#include <numbers>

namespace swan
{
    inline constexpr double kSpeedOfLight = 299'792'458.0; // [m/s], exact
    inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

    // Reduces x into [0, period). The nearest multiple is subtracted first so that long
    // paths (tens of meters) against short periods (millimeters) keep their precision.
    double wrap_to_period(double x, double period);

    // Signed distance from x to the nearest multiple of period, in [-period/2, period/2]
    double distance_to_multiple(double x, double period);

    inline double wrap_angle(double radians) { return wrap_to_period(radians, kTwoPi); }

    // dBm <-> W
    double dbm_to_watt(double dbm);
    double watt_to_dbm(double watt);

    struct RfConfig
    {
        double carrier_hz = 28e9;    // f_c
        double n_eff = 1.4;          // Effective refractive index of the dielectric waveguide
        double power_w = 1e-2;       // Transmit power (10 dBm)
        double noise_w = 1e-12;      // Noise power (-90 dBm)
        double min_spacing_m = -1.0; // Minimum inter-antenna spacing; negative selects lambda/2
    };

    // Radio-frequency parameters with derived wavelength quantities.
    // All derived constants are computed once at construction.
    class RfParams
    {
    public:
        explicit RfParams(const RfConfig &config = {}); // Throws std::invalid_argument

        double carrier_hz() const { return carrier_hz_; }
        double n_eff() const { return n_eff_; }
        double power_w() const { return power_w_; }
        double noise_w() const { return noise_w_; }
        double min_spacing() const { return min_spacing_; }

        double wavelength() const { return lambda_; }         // c / f_c
        double guided_wavelength() const { return lambda_g_; } // lambda / n_eff
        double wavenumber() const { return k0_; }              // 2 pi / lambda
        double eta() const { return eta_; }                    // c^2 / (16 pi^2 f_c^2)

    private:
        double carrier_hz_, n_eff_, power_w_, noise_w_, min_spacing_;
        double lambda_, lambda_g_, k0_, eta_;
    };

    struct Position3
    {
        double x = 0.0, y = 0.0, z = 0.0;
    };

    // Service region, waveguide height and user location. The waveguide runs along x at
    // (y = 0, z = height); the first feed point sits at x = first_feed_x.
    struct Geometry
    {
        double region_x = 50.0;     // D_x [m]
        double region_y = 20.0;     // D_y [m]
        double height = 3.0;        // d [m]
        Position3 user{};           // u [m]
        double first_feed_x = -25.0; // psi_0^1 [m]

        // c_y = u_y^2 + (d - u_z)^2
        double cy() const { return user.y * user.y + (height - user.z) * (height - user.z); }

        // Throws std::invalid_argument on D_x <= 0, d <= 0, c_y <= 0 or a user outside
        // [first_feed_x, first_feed_x + D_x] along x.
        void validate() const;
    };

    struct ComplexCoeff
    {
        double amplitude = 0.0;
        double phase = 0.0; // [0, 2 pi)

        std::complex<double> value() const { return std::polar(amplitude, phase); }
    };

    // Free-space LoS coefficient between a pinching antenna at x = pa_x and the user
    ComplexCoeff free_space_channel(double pa_x, const RfParams &rf, const Geometry &geo);

    // Lossless in-waveguide propagation from the feed to the antenna; pa_x must not be
    // upstream of feed_x (throws std::domain_error)
    ComplexCoeff in_waveguide_phase(double feed_x, double pa_x, const RfParams &rf);

    // Received SNR of a single antenna: P eta / (sigma^2 ((pa_x - u_x)^2 + c_y))
    double snr_single_pa(double pa_x, const RfParams &rf, const Geometry &geo);

    // log2(1 + snr) [bit/s/Hz]
    double rate(double snr);
}

#endif
