// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/channel/channel.hpp"

#include <cmath>
#include <numbers>

#include "irsthz/specfun/errors.hpp"
#include "irsthz/specfun/gamma.hpp"

namespace irsthz
{

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double dbm_to_watt(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

void HopParams::validate() const
{
    require(fading.alpha > 0, "hop: alpha must be positive");
    require(fading.mu > 0, "hop: mu must be positive");
    require(fading.omega > 0, "hop: omega must be positive");
    require(pointing.phi > 0, "hop: phi must be positive");
    require(pointing.s0 > 0 && pointing.s0 <= 1, "hop: S0 must be in (0, 1]");
    require(distance_m > 0, "hop: distance must be positive");
    require(tx_gain_linear >= 1 && rx_gain_linear >= 1,
            "hop: antenna gains must be at least 0 dBi");
}

void Scenario::validate() const
{
    hop1.validate();
    hop2.validate();
    require(n_elements >= 1, "scenario: at least one IRS element");
    require(freq_hz > 0, "scenario: frequency must be positive");
    require(path_loss_exponent > 0, "scenario: path-loss exponent positive");
    require(atmosphere.k_alpha_per_m >= 0,
            "scenario: absorption coefficient must be >= 0");
    require(atmosphere.temperature_k > 0 && atmosphere.pressure_hpa > 0,
            "scenario: temperature and pressure must be positive");
    require(atmosphere.rel_humidity_pct >= 0
                && atmosphere.rel_humidity_pct <= 100,
            "scenario: relative humidity must be in [0, 100]");
    require(noise_var_w > 0, "scenario: noise variance must be positive");
}

double Scenario::absorption_length() const
{
    return atmosphere.absorption_length_m > 0
               ? atmosphere.absorption_length_m
               : hop1.distance_m + hop2.distance_m;
}

double path_loss_coeff(double freq_hz, double distance_m, double gt_linear,
                       double gr_linear, double eta)
{
    require(freq_hz > 0 && distance_m > 0 && gt_linear > 0 && gr_linear > 0
                && eta > 0,
            "path_loss_coeff: all inputs must be positive");
    return speed_of_light * std::sqrt(gt_linear * gr_linear)
           / (4 * std::numbers::pi * freq_hz)
           * std::pow(distance_m, -0.5 * eta);
}

double absorption_coeff(double k_alpha_per_m, double length_m)
{
    require(k_alpha_per_m >= 0 && length_m >= 0,
            "absorption_coeff: inputs must be non-negative");
    return std::exp(-0.5 * k_alpha_per_m * length_m);
}

double hop_moment(HopParams const& hop, double n)
{
    hop.validate();
    auto const& f = hop.fading;
    auto const& p = hop.pointing;
    double const log_fading = n * std::log(f.omega)
                              - (n / f.alpha) * std::log(f.mu)
                              + log_gamma(n / f.alpha + f.mu)
                              - log_gamma(f.mu);
    double const pointing = p.phi / (p.phi + n) * std::pow(p.s0, n);
    return pointing * std::exp(log_fading);
}

Moments hop_moments(HopParams const& hop)
{
    double const m1 = hop_moment(hop, 1);
    double const m2 = hop_moment(hop, 2);
    return {m1, m2 - m1 * m1};
}

Moments product_stats(Moments h1, Moments h2)
{
    return {h1.mean * h2.mean,
            h1.variance * h2.variance + h1.variance * h2.mean * h2.mean
                + h1.mean * h1.mean * h2.variance};
}

LseParams lse_params(int n_elements, Moments per_element)
{
    require(n_elements >= 1, "lse_params: need at least one element");
    require(per_element.mean > 0, "lse_params: mean must be positive");
    if (!(per_element.variance > 0))
        throw DegenerateChannelError(
            "lse_params: zero variance leaves the gamma shape undefined");
    LseParams lse;
    lse.mean = n_elements * per_element.mean;
    lse.variance = n_elements * per_element.variance;
    lse.lambda = lse.variance / lse.mean;
    lse.tau = lse.mean * lse.mean / lse.variance - 1;
    return lse;
}

LseParams lse_params(Scenario const& sc)
{
    sc.validate();
    return lse_params(sc.n_elements,
                      product_stats(hop_moments(sc.hop1), hop_moments(sc.hop2)));
}

double link_gain(Scenario const& sc)
{
    double const hl1 = path_loss_coeff(sc.freq_hz, sc.hop1.distance_m,
                                       sc.hop1.tx_gain_linear,
                                       sc.hop1.rx_gain_linear,
                                       sc.path_loss_exponent);
    double const hl2 = path_loss_coeff(sc.freq_hz, sc.hop2.distance_m,
                                       sc.hop2.tx_gain_linear,
                                       sc.hop2.rx_gain_linear,
                                       sc.path_loss_exponent);
    double const ha = absorption_coeff(sc.atmosphere.k_alpha_per_m,
                                       sc.absorption_length());
    double const g = ha * hl1 * hl2;
    return g * g;
}

double snr_scale(Scenario const& sc, double tx_power_w)
{
    sc.validate();
    require(tx_power_w > 0, "snr_scale: transmit power must be positive");
    return tx_power_w / sc.noise_var_w * link_gain(sc);
}

double snr_cdf(double lambda, LseParams const& lse, double lambda0)
{
    require(lambda0 > 0, "snr_cdf: lambda0 must be positive");
    if (lambda <= 0)
        return 0;
    return reg_lower_gamma(lse.tau + 1,
                           std::sqrt(lambda / lambda0) / lse.lambda);
}

double amplitude_cdf(double b, LseParams const& lse)
{
    if (b <= 0)
        return 0;
    return reg_lower_gamma(lse.tau + 1, b / lse.lambda);
}

}  // namespace irsthz
