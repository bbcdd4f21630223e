// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

namespace irsthz
{
//---------------------------------------------------------------------------//
// Physical constants and unit helpers
//---------------------------------------------------------------------------//
inline constexpr double speed_of_light = 299792458.0;  // m/s

double db_to_linear(double db);
double dbm_to_watt(double dbm);

//---------------------------------------------------------------------------//
// Per-hop model
//---------------------------------------------------------------------------//
//! Generalized alpha-mu small-scale fading: R = omega * (G / mu)^(1/alpha)
struct AlphaMuParams
{
    double alpha = 3.0;
    double mu = 3.0;
    double omega = 1.0;
};

//! Pointing error with zero boresight: S0 * U^(1/phi), U uniform on (0, 1)
struct PointingParams
{
    double phi = 15.0;
    double s0 = 0.8;
};

struct HopParams
{
    AlphaMuParams fading;
    PointingParams pointing;
    double distance_m = 15.0;
    double tx_gain_linear = 1.0;
    double rx_gain_linear = 1.0;

    void validate() const;
};

struct Moments
{
    double mean = 0;
    double variance = 0;
};

//! Gamma (Laguerre series) approximation of the composite amplitude B.
struct LseParams
{
    double lambda = 0;  //!< scale, sigma_B^2 / mu_B
    double tau = 0;     //!< shape minus one, mu_B^2 / sigma_B^2 - 1
    double mean = 0;    //!< mu_B
    double variance = 0;  //!< sigma_B^2
};

/*!
 * Atmospheric state and the molecular absorption coefficient.
 *
 * Temperature, pressure and humidity are carried for provenance only: the
 * absorption model k(f, T, P, humidity) is external, so k_alpha_per_m is a
 * direct input. The default is representative for 275 GHz, not calibrated.
 */
struct AtmosphereConfig
{
    double temperature_k = 296.0;
    double pressure_hpa = 1013.25;
    double rel_humidity_pct = 50.0;
    double k_alpha_per_m = 0.0033;
    //! Absorption path length; non-positive selects d1 + d2
    double absorption_length_m = 0;
};

//! Full link description shared by all metrics.
struct Scenario
{
    HopParams hop1;
    HopParams hop2;
    AtmosphereConfig atmosphere;
    int n_elements = 10;
    double freq_hz = 275e9;
    double path_loss_exponent = 2.0;
    double noise_var_w = 6.08e-6;

    void validate() const;
    double absorption_length() const;
};

//---------------------------------------------------------------------------//
// Free functions
//---------------------------------------------------------------------------//
// Deterministic path gain c sqrt(Gt Gr) / (4 pi f) d^(-eta/2)
double path_loss_coeff(double freq_hz, double distance_m, double gt_linear,
                       double gr_linear, double eta);

// Molecular absorption amplitude exp(-k L / 2)
double absorption_coeff(double k_alpha_per_m, double length_m);

// E[chi^n] of the joint fading-pointing amplitude on one hop
double hop_moment(HopParams const& hop, double n);

Moments hop_moments(HopParams const& hop);

// Mean and variance of the product of two independent variables
Moments product_stats(Moments h1, Moments h2);

// Moment-matched gamma parameters for the sum of n iid per-element gains
LseParams lse_params(int n_elements, Moments per_element);
LseParams lse_params(Scenario const& sc);

// lambda_0 = (Ps / sigma_n^2) (h_a h_l1 h_l2)^2
double snr_scale(Scenario const& sc, double tx_power_w);

// Deterministic gain (h_a h_l1 h_l2)^2 multiplying the transmit SNR
double link_gain(Scenario const& sc);

// CDF of the end-to-end SNR lambda = lambda_0 B^2
double snr_cdf(double lambda, LseParams const& lse, double lambda0);

// CDF of B under the gamma approximation
double amplitude_cdf(double b, LseParams const& lse);

}  // namespace irsthz
