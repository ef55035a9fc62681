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

/* C interface to the swan library. All functions return a swan_status; on failure the
 * message is available from swan_last_error_message() on the calling thread. Output
 * pointers are left untouched on failure. */

#ifndef SWAN_SWAN_H
#define SWAN_SWAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SWAN_BUILDING_LIBRARY)
#define SWAN_API __declspec(dllexport)
#else
#define SWAN_API __declspec(dllimport)
#endif
#else
#define SWAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swan_status
{
    SWAN_OK = 0,
    SWAN_ERR_NULL_POINTER = 1,
    SWAN_ERR_INVALID_ARGUMENT = 2,
    SWAN_ERR_DOMAIN = 3,
    SWAN_ERR_OUT_OF_RANGE = 4,
    SWAN_ERR_INTERNAL = 5
} swan_status;

SWAN_API const char *swan_last_error_message(void);
SWAN_API const char *swan_status_string(swan_status status);
SWAN_API const char *swan_version(void);

typedef enum swan_architecture
{
    SWAN_ARCH_CONVENTIONAL = 0,
    SWAN_ARCH_SEGMENT_SELECTION = 1,
    SWAN_ARCH_SEGMENT_AGGREGATION = 2
} swan_architecture;

typedef enum swan_placement_kind
{
    SWAN_PLACEMENT_PHASE_ALIGNED = 0,
    SWAN_PLACEMENT_CENTERED = 1
} swan_placement_kind;

typedef enum swan_snr_form
{
    SWAN_SNR_EXACT = 0,   /* full-phase coherent sum at the final positions */
    SWAN_SNR_ALIGNED = 1, /* magnitudes at the final positions */
    SWAN_SNR_APPROX = 2   /* magnitudes at the initial positions */
} swan_snr_form;

/* ---- unit helpers ---- */

SWAN_API double swan_dbm_to_watt(double dbm);
SWAN_API double swan_watt_to_dbm(double watt);

/* ---- system ---- */

typedef struct swan_system_params
{
    double carrier_hz;    /* f_c */
    double n_eff;         /* effective refractive index */
    double power_w;       /* transmit power [W] */
    double noise_w;       /* noise power [W] */
    double min_spacing_m; /* negative: lambda / 2 */
    double region_x;      /* D_x [m] */
    double region_y;      /* D_y [m] */
    double height;        /* d [m] */
    double user_x, user_y, user_z;
    double first_feed_x;  /* NaN: -region_x / 2 */
    double eps0;          /* failure-repair rate ratio per unit length squared */
    size_t segments;      /* M */
} swan_system_params;

SWAN_API void swan_system_params_defaults(swan_system_params *params);

typedef struct swan_system swan_system_t;

SWAN_API swan_status swan_system_create(const swan_system_params *params, swan_system_t **out);
SWAN_API void swan_system_destroy(swan_system_t *system);

/* Copy of the parameters with first_feed_x and min_spacing_m resolved */
SWAN_API swan_status swan_system_get_params(const swan_system_t *system, swan_system_params *out);

typedef struct swan_system_derived
{
    double wavelength;
    double guided_wavelength;
    double eta;
    double cy;
    double segment_length;
    double max_snr;         /* gamma_M: single-antenna SNR with the antenna right above the user */
    double p_work_segment;  /* 1 / (eps0 L^2 + 1) */
    size_t nearest_segment; /* 0-based */
} swan_system_derived;

SWAN_API swan_status swan_system_get_derived(const swan_system_t *system, swan_system_derived *out);

/* SNR of one antenna at pa_x with no waveguide loss */
SWAN_API swan_status swan_snr_single(const swan_system_t *system, double pa_x, double *out);
SWAN_API swan_status swan_rate(double snr, double *out);

/* ---- closed forms ---- */

SWAN_API swan_status swan_outage_threshold(double target_rate, double *tau);
SWAN_API swan_status swan_pnr_conventional(double eps0, double region_x, double *out);
SWAN_API swan_status swan_pnr_ss(double eps0, double segment_length, double *out);
SWAN_API swan_status swan_pnr_sa(double eps0, double region_x, size_t segments, double *out);
/* probability that every segment has failed, 1 - pnr_sa computed without cancellation */
SWAN_API swan_status swan_pnr_sa_complement(double eps0, double region_x, size_t segments, double *out);
SWAN_API swan_status swan_op_conventional(double eps0, double region_x, double snr, double target_rate,
                                          double *out);
SWAN_API swan_status swan_op_ss(double eps0, double segment_length, double snr, double target_rate, double *out);
SWAN_API swan_status swan_gain_ss(double eps0, double region_x, size_t segments, double *out);
SWAN_API swan_status swan_gain_sa(double eps0, double region_x, size_t segments, double *out);
/* 1 + eps0 D_x^2 minus the gain, without cancellation */
SWAN_API swan_status swan_gain_ss_gap(double eps0, double region_x, size_t segments, double *out);
SWAN_API swan_status swan_gain_sa_gap(double eps0, double region_x, size_t segments, double *out);
SWAN_API swan_status swan_asymptotic_coeffs(double eps0, double region_x, double cy, double *tau_dx,
                                            double *kappa_dx);

/* ---- two-state reliability model ---- */

typedef struct swan_transition
{
    double p11, p10, p00, p01; /* p_ij = Pr(state j at t | state i at 0), 1 = working */
} swan_transition;

SWAN_API swan_status swan_rates_for_length(double lambda0, double mu0, double length, double *lambda, double *mu);
SWAN_API swan_status swan_lifetime_cdf(double t, double lambda, double *out);
SWAN_API swan_status swan_transition_probabilities(double lambda, double mu, double t, swan_transition *out);
SWAN_API swan_status swan_steady_state(double lambda, double mu, double *p_work);

/* Fraction of simulated trajectories in the working state at each of times[0..n_times) */
SWAN_API swan_status swan_empirical_working_fraction(double lambda, double mu, int initial_working,
                                                     const double *times, size_t n_times,
                                                     uint64_t n_trajectories, uint64_t seed, unsigned threads,
                                                     double *out);

/* ---- placement ---- */

typedef struct swan_placement swan_placement_t;

typedef struct swan_placement_row
{
    double feed;
    double initial;
    double shift;
    double position;
    double electrical_length;
    double residual;
    double closed_form_gap;
    int closed_form_agrees;
    int in_segment;
    int spacing_ok;
} swan_placement_row;

SWAN_API swan_status swan_placement_create(const swan_system_t *system, swan_placement_kind kind,
                                           swan_placement_t **out);
SWAN_API void swan_placement_destroy(swan_placement_t *placement);
SWAN_API swan_status swan_placement_count(const swan_placement_t *placement, size_t *out);
SWAN_API swan_status swan_placement_get_row(const swan_placement_t *placement, size_t m, swan_placement_row *out);
SWAN_API swan_status swan_placement_summary(const swan_placement_t *placement, size_t *nearest,
                                            double *reference_length, double *min_gap, int *feasible);

/* ---- segment aggregation ---- */

/* states[m] != 0 marks segment m as working; n_states must equal the segment count */
SWAN_API swan_status swan_snr_sa(const swan_system_t *system, const swan_placement_t *placement,
                                 const uint8_t *states, size_t n_states, swan_snr_form form, double *out);
SWAN_API swan_status swan_op_sa_bruteforce(const swan_system_t *system, const swan_placement_t *placement,
                                           double target_rate, double *out);
SWAN_API swan_status swan_op_sa_bound_bruteforce(const swan_system_t *system, const swan_placement_t *placement,
                                                 double target_rate, double *out);
SWAN_API swan_status swan_sa_moments(const swan_system_t *system, const swan_placement_t *placement,
                                     double *mean, double *variance);
SWAN_API swan_status swan_sa_moments_symmetric(const swan_system_t *system, double *mean, double *variance);
SWAN_API swan_status swan_op_sa_gaussian_bound(const swan_system_t *system, double mean, double variance,
                                               double target_rate, double *out);

/* ---- Monte Carlo ---- */

typedef struct swan_mc_config
{
    uint64_t trials;
    uint64_t seed;
    uint64_t batch;
    unsigned threads; /* 0: hardware concurrency */
} swan_mc_config;

typedef struct swan_estimate
{
    double value;
    double std_err;
    uint64_t hits;
    uint64_t n;
} swan_estimate;

SWAN_API void swan_mc_config_defaults(swan_mc_config *config);

SWAN_API swan_status swan_estimate_pnr(const swan_system_t *system, swan_architecture arch,
                                       const swan_mc_config *mc, swan_estimate *out);

/* exact: full-phase SNR at the final positions; magnitude: magnitudes at the initial
 * positions. Both agree for the single-antenna architectures. Either may be NULL. */
SWAN_API swan_status swan_estimate_op(const swan_system_t *system, swan_architecture arch, double target_rate,
                                      swan_placement_kind placement, const swan_mc_config *mc,
                                      swan_estimate *exact, swan_estimate *magnitude);

#ifdef __cplusplus
}
#endif

#endif
