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

#include "swan/swan.h"

#include "swan/aggregation.hpp"
#include "swan/channel.hpp"
#include "swan/conventional.hpp"
#include "swan/montecarlo.hpp"
#include "swan/placement.hpp"
#include "swan/reliability.hpp"
#include "swan/segmented.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <algorithm>
#include <new>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

struct swan_system
{
    swan::SystemParams params;
};

struct swan_placement
{
    swan::PlacementSolution solution;
    std::size_t segments;
    double region_x;
    double first_feed_x;
};

namespace
{
    thread_local std::string g_last_error;

    swan_status fail(swan_status status, const char *message)
    {
        g_last_error = message;
        return status;
    }

    // Runs fn and maps exceptions onto status codes
    template <typename Fn>
    swan_status guarded(Fn &&fn)
    {
        try
        {
            g_last_error.clear();
            fn();
            return SWAN_OK;
        }
        catch (const std::domain_error &e)
        {
            return fail(SWAN_ERR_DOMAIN, e.what());
        }
        catch (const std::invalid_argument &e)
        {
            return fail(SWAN_ERR_INVALID_ARGUMENT, e.what());
        }
        catch (const std::out_of_range &e)
        {
            return fail(SWAN_ERR_OUT_OF_RANGE, e.what());
        }
        catch (const std::bad_alloc &)
        {
            return fail(SWAN_ERR_INTERNAL, "out of memory");
        }
        catch (const std::exception &e)
        {
            return fail(SWAN_ERR_INTERNAL, e.what());
        }
        catch (...)
        {
            return fail(SWAN_ERR_INTERNAL, "unknown error");
        }
    }

    template <typename... P>
    bool any_null(P... p)
    {
        return ((p == nullptr) || ...);
    }

    constexpr const char *kNull = "null pointer argument";

    swan::SystemParams to_core(const swan_system_params &p)
    {
        swan::RfConfig rf;
        rf.carrier_hz = p.carrier_hz;
        rf.n_eff = p.n_eff;
        rf.power_w = p.power_w;
        rf.noise_w = p.noise_w;
        rf.min_spacing_m = p.min_spacing_m;

        swan::Geometry geo;
        geo.region_x = p.region_x;
        geo.region_y = p.region_y;
        geo.height = p.height;
        geo.user = {p.user_x, p.user_y, p.user_z};
        geo.first_feed_x = std::isnan(p.first_feed_x) ? -0.5 * p.region_x : p.first_feed_x;
        geo.validate();

        if (p.segments == 0)
            throw std::invalid_argument("segment count must be at least 1");
        if (!(p.eps0 >= 0.0) || !std::isfinite(p.eps0))
            throw std::invalid_argument("eps0 must be finite and non-negative");
        return {swan::RfParams(rf), geo, p.eps0, p.segments};
    }

    swan::McConfig to_core(const swan_mc_config &c)
    {
        swan::McConfig mc;
        mc.trials = c.trials;
        mc.seed = c.seed;
        mc.batch = c.batch;
        mc.threads = c.threads;
        mc.validate();
        return mc;
    }

    swan::Architecture to_core(swan_architecture a)
    {
        switch (a)
        {
        case SWAN_ARCH_CONVENTIONAL:
            return swan::Architecture::conventional;
        case SWAN_ARCH_SEGMENT_SELECTION:
            return swan::Architecture::segment_selection;
        case SWAN_ARCH_SEGMENT_AGGREGATION:
            return swan::Architecture::segment_aggregation;
        }
        throw std::invalid_argument("unknown architecture");
    }

    swan::PlacementKind to_core(swan_placement_kind k)
    {
        switch (k)
        {
        case SWAN_PLACEMENT_PHASE_ALIGNED:
            return swan::PlacementKind::phase_aligned;
        case SWAN_PLACEMENT_CENTERED:
            return swan::PlacementKind::centered;
        }
        throw std::invalid_argument("unknown placement kind");
    }

    swan_estimate to_c(const swan::McEstimate &e) { return {e.value, e.std_err, e.hits, e.n}; }

    swan::SegmentedWaveguide waveguide(const swan::SystemParams &p)
    {
        return swan::SegmentedWaveguide::over(p.geo, p.segments);
    }

    void require_match(const swan_system *s, const swan_placement *pl)
    {
        if (pl->segments != s->params.segments || pl->region_x != s->params.geo.region_x ||
            pl->first_feed_x != s->params.geo.first_feed_x)
            throw std::invalid_argument("placement was computed for a different waveguide");
    }
}

extern "C" {

const char *swan_last_error_message(void) { return g_last_error.c_str(); }

const char *swan_status_string(swan_status status)
{
    switch (status)
    {
    case SWAN_OK:
        return "ok";
    case SWAN_ERR_NULL_POINTER:
        return "null pointer";
    case SWAN_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case SWAN_ERR_DOMAIN:
        return "domain error";
    case SWAN_ERR_OUT_OF_RANGE:
        return "out of range";
    case SWAN_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *swan_version(void) { return SWAN_VERSION_STRING; }

double swan_dbm_to_watt(double dbm) { return swan::dbm_to_watt(dbm); }
double swan_watt_to_dbm(double watt) { return swan::watt_to_dbm(watt); }

void swan_system_params_defaults(swan_system_params *p)
{
    if (p == nullptr)
        return;
    const swan::RfConfig rf;
    const swan::Geometry geo;
    p->carrier_hz = rf.carrier_hz;
    p->n_eff = rf.n_eff;
    p->power_w = rf.power_w;
    p->noise_w = rf.noise_w;
    p->min_spacing_m = rf.min_spacing_m;
    p->region_x = geo.region_x;
    p->region_y = geo.region_y;
    p->height = geo.height;
    p->user_x = geo.user.x;
    p->user_y = geo.user.y;
    p->user_z = geo.user.z;
    p->first_feed_x = std::numeric_limits<double>::quiet_NaN();
    p->eps0 = 0.3;
    p->segments = 1;
}

swan_status swan_system_create(const swan_system_params *params, swan_system_t **out)
{
    if (any_null(params, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = new swan_system{to_core(*params)}; });
}

void swan_system_destroy(swan_system_t *system) { delete system; }

swan_status swan_system_get_params(const swan_system_t *s, swan_system_params *out)
{
    if (any_null(s, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    const auto &p = s->params;
    out->carrier_hz = p.rf.carrier_hz();
    out->n_eff = p.rf.n_eff();
    out->power_w = p.rf.power_w();
    out->noise_w = p.rf.noise_w();
    out->min_spacing_m = p.rf.min_spacing();
    out->region_x = p.geo.region_x;
    out->region_y = p.geo.region_y;
    out->height = p.geo.height;
    out->user_x = p.geo.user.x;
    out->user_y = p.geo.user.y;
    out->user_z = p.geo.user.z;
    out->first_feed_x = p.geo.first_feed_x;
    out->eps0 = p.eps0;
    out->segments = p.segments;
    return SWAN_OK;
}

swan_status swan_system_get_derived(const swan_system_t *s, swan_system_derived *out)
{
    if (any_null(s, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        const auto &p = s->params;
        const auto wg = waveguide(p);
        swan_system_derived d{};
        d.wavelength = p.rf.wavelength();
        d.guided_wavelength = p.rf.guided_wavelength();
        d.eta = p.rf.eta();
        d.cy = p.geo.cy();
        d.segment_length = wg.segment_length();
        d.max_snr = swan::snr_single_pa(p.geo.user.x, p.rf, p.geo);
        d.p_work_segment = swan::pnr_ss(p.eps0, wg.segment_length());
        d.nearest_segment = swan::select_segment(p.geo.user.x, wg);
        *out = d;
    });
}

swan_status swan_snr_single(const swan_system_t *s, double pa_x, double *out)
{
    if (any_null(s, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::snr_single_pa(pa_x, s->params.rf, s->params.geo); });
}

swan_status swan_rate(double snr, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::rate(snr); });
}

swan_status swan_outage_threshold(double target_rate, double *tau)
{
    if (tau == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *tau = swan::OutageSpec(target_rate).threshold(); });
}

swan_status swan_pnr_conventional(double eps0, double region_x, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::pnr_conventional(eps0, region_x); });
}

swan_status swan_pnr_ss(double eps0, double segment_length, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::pnr_ss(eps0, segment_length); });
}

swan_status swan_pnr_sa(double eps0, double region_x, size_t segments, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::pnr_sa(eps0, region_x, segments); });
}

swan_status swan_pnr_sa_complement(double eps0, double region_x, size_t segments, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::pnr_sa_complement(eps0, region_x, segments); });
}

swan_status swan_op_conventional(double eps0, double region_x, double snr, double target_rate, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::op_conventional(eps0, region_x, snr, swan::OutageSpec(target_rate)); });
}

swan_status swan_op_ss(double eps0, double segment_length, double snr, double target_rate, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::op_ss(eps0, segment_length, snr, swan::OutageSpec(target_rate)); });
}

swan_status swan_gain_ss(double eps0, double region_x, size_t segments, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::gain_ss(eps0, region_x, segments); });
}

swan_status swan_gain_sa(double eps0, double region_x, size_t segments, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::gain_sa(eps0, region_x, segments); });
}

swan_status swan_gain_ss_gap(double eps0, double region_x, size_t segments, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::gain_ss_gap(eps0, region_x, segments); });
}

swan_status swan_gain_sa_gap(double eps0, double region_x, size_t segments, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::gain_sa_gap(eps0, region_x, segments); });
}

swan_status swan_asymptotic_coeffs(double eps0, double region_x, double cy, double *tau_dx, double *kappa_dx)
{
    if (any_null(tau_dx, kappa_dx))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        if (!(cy > 0.0))
            throw std::domain_error("c_y must be positive");
        swan::Geometry geo;
        geo.user = {0.0, 0.0, 0.0};
        geo.height = std::sqrt(cy);
        const auto c = swan::sa_asymptotic_coeffs(eps0, region_x, geo);
        *tau_dx = c.tau_dx;
        *kappa_dx = c.kappa_dx;
    });
}

swan_status swan_rates_for_length(double lambda0, double mu0, double length, double *lambda, double *mu)
{
    if (any_null(lambda, mu))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        const auto r = swan::rates_for_length({lambda0, mu0}, length);
        *lambda = r.lambda;
        *mu = r.mu;
    });
}

swan_status swan_lifetime_cdf(double t, double lambda, double *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = swan::lifetime_cdf(t, lambda); });
}

swan_status swan_transition_probabilities(double lambda, double mu, double t, swan_transition *out)
{
    if (out == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        const auto p = swan::transition_probabilities(t, {1.0, lambda, mu});
        *out = {p.p11, p.p10, p.p00, p.p01};
    });
}

swan_status swan_steady_state(double lambda, double mu, double *p_work)
{
    if (p_work == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *p_work = swan::steady_state(swan::ComponentRates{1.0, lambda, mu}).p_work; });
}

swan_status swan_empirical_working_fraction(double lambda, double mu, int initial_working, const double *times,
                                            size_t n_times, uint64_t n_trajectories, uint64_t seed,
                                            unsigned threads, double *out)
{
    if (any_null(times, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        const auto f = swan::empirical_working_fraction(
            {1.0, lambda, mu}, initial_working ? swan::LinkState::working : swan::LinkState::failed,
            std::span<const double>(times, n_times), n_trajectories, seed, threads);
        std::copy(f.begin(), f.end(), out);
    });
}

swan_status swan_placement_create(const swan_system_t *s, swan_placement_kind kind, swan_placement_t **out)
{
    if (any_null(s, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        const auto &p = s->params;
        const auto wg = waveguide(p);
        auto sol = to_core(kind) == swan::PlacementKind::phase_aligned
                       ? swan::place_antennas_sa(wg, p.rf, p.geo)
                       : swan::place_antennas_centered(wg, p.rf, p.geo);
        *out = new swan_placement{std::move(sol), p.segments, p.geo.region_x, p.geo.first_feed_x};
    });
}

void swan_placement_destroy(swan_placement_t *placement) { delete placement; }

swan_status swan_placement_count(const swan_placement_t *pl, size_t *out)
{
    if (any_null(pl, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    *out = pl->solution.segments.size();
    return SWAN_OK;
}

swan_status swan_placement_get_row(const swan_placement_t *pl, size_t m, swan_placement_row *out)
{
    if (any_null(pl, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    if (m >= pl->solution.segments.size())
        return fail(SWAN_ERR_OUT_OF_RANGE, "segment index out of range");
    const auto &s = pl->solution.segments[m];
    *out = {s.feed,
            s.initial,
            s.shift,
            s.position,
            s.electrical_length,
            s.residual,
            s.closed_form_gap,
            s.closed_form_agrees ? 1 : 0,
            s.in_segment ? 1 : 0,
            s.spacing_ok ? 1 : 0};
    return SWAN_OK;
}

swan_status swan_placement_summary(const swan_placement_t *pl, size_t *nearest, double *reference_length,
                                   double *min_gap, int *feasible)
{
    if (pl == nullptr)
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    if (nearest)
        *nearest = pl->solution.nearest;
    if (reference_length)
        *reference_length = pl->solution.reference_length;
    if (min_gap)
        *min_gap = pl->solution.min_gap();
    if (feasible)
        *feasible = pl->solution.feasible() ? 1 : 0;
    return SWAN_OK;
}

swan_status swan_snr_sa(const swan_system_t *s, const swan_placement_t *pl, const uint8_t *states,
                        size_t n_states, swan_snr_form form, double *out)
{
    if (any_null(s, pl, states, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        require_match(s, pl);
        const swan::SegmentStates st(std::vector<std::uint8_t>(states, states + n_states));
        const auto &p = s->params;
        switch (form)
        {
        case SWAN_SNR_EXACT:
            *out = swan::snr_sa_exact(pl->solution, st, p.rf, p.geo);
            return;
        case SWAN_SNR_ALIGNED:
            *out = swan::snr_sa_aligned(pl->solution, st, p.rf, p.geo);
            return;
        case SWAN_SNR_APPROX:
            *out = swan::snr_sa_approx(pl->solution, st, p.rf, p.geo);
            return;
        }
        throw std::invalid_argument("unknown SNR form");
    });
}

swan_status swan_op_sa_bruteforce(const swan_system_t *s, const swan_placement_t *pl, double target_rate,
                                  double *out)
{
    if (any_null(s, pl, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        require_match(s, pl);
        const auto &p = s->params;
        *out = swan::op_sa_bruteforce(pl->solution, p.eps0, waveguide(p), p.rf, p.geo,
                                      swan::OutageSpec(target_rate));
    });
}

swan_status swan_op_sa_bound_bruteforce(const swan_system_t *s, const swan_placement_t *pl, double target_rate,
                                        double *out)
{
    if (any_null(s, pl, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        require_match(s, pl);
        const auto &p = s->params;
        *out = swan::op_sa_bound_bruteforce(pl->solution, p.eps0, waveguide(p), p.rf, p.geo,
                                            swan::OutageSpec(target_rate));
    });
}

swan_status swan_sa_moments(const swan_system_t *s, const swan_placement_t *pl, double *mean, double *variance)
{
    if (any_null(s, pl, mean, variance))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        require_match(s, pl);
        const auto &p = s->params;
        const auto m = swan::sa_moments(pl->solution, p.eps0, waveguide(p), p.geo);
        *mean = m.mean;
        *variance = m.variance;
    });
}

swan_status swan_sa_moments_symmetric(const swan_system_t *s, double *mean, double *variance)
{
    if (any_null(s, mean, variance))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        const auto &p = s->params;
        const auto m = swan::sa_moments_symmetric(p.eps0, waveguide(p), p.geo);
        *mean = m.mean;
        *variance = m.variance;
    });
}

swan_status swan_op_sa_gaussian_bound(const swan_system_t *s, double mean, double variance, double target_rate,
                                      double *out)
{
    if (any_null(s, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        *out = swan::op_sa_gaussian_bound({mean, variance}, s->params.segments, s->params.rf,
                                          swan::OutageSpec(target_rate));
    });
}

void swan_mc_config_defaults(swan_mc_config *c)
{
    if (c == nullptr)
        return;
    const swan::McConfig mc;
    *c = {mc.trials, mc.seed, mc.batch, mc.threads};
}

swan_status swan_estimate_pnr(const swan_system_t *s, swan_architecture arch, const swan_mc_config *mc,
                              swan_estimate *out)
{
    if (any_null(s, mc, out))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] { *out = to_c(swan::estimate_pnr(to_core(arch), s->params, to_core(*mc))); });
}

swan_status swan_estimate_op(const swan_system_t *s, swan_architecture arch, double target_rate,
                             swan_placement_kind placement, const swan_mc_config *mc, swan_estimate *exact,
                             swan_estimate *magnitude)
{
    if (any_null(s, mc))
        return fail(SWAN_ERR_NULL_POINTER, kNull);
    return guarded([&] {
        const auto e = swan::estimate_op(to_core(arch), s->params, swan::OutageSpec(target_rate), to_core(*mc),
                                         to_core(placement));
        if (exact)
            *exact = to_c(e.exact);
        if (magnitude)
            *magnitude = to_c(e.magnitude);
    });
}

} // extern "C"
