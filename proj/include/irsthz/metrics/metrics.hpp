// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <functional>
#include <optional>

#include "irsthz/channel/channel.hpp"
#include "irsthz/metrics/modulation.hpp"

namespace irsthz
{
//---------------------------------------------------------------------------//
// Result types
//---------------------------------------------------------------------------//
//! How a Fox-H-bearing metric was actually obtained
enum class EvalPath
{
    closed_form,          //!< lower-incomplete (cancellation-free) form
    closed_form_upper,    //!< constant plus upper-incomplete terms
    quadrature_fallback,  //!< contour failed; adaptive quadrature used
};

char const* to_string(EvalPath p);

struct MetricValue
{
    double value = 0;
    EvalPath path = EvalPath::closed_form;
};

struct AsymptoticResult
{
    double diversity_order = 0;
    double coding_gain = 0;
    //! (lambda0, asymptotic metric) when evaluated at a point
    std::optional<std::pair<double, double>> value_at;
};

enum class AsymptoticPrefactor
{
    exact,            //!< 1 / Gamma(tau + 2), the true leading term
    paper_displayed,  //!< 1 / Gamma(tau + 1)
};

enum class AserForm
{
    automatic,  //!< lower form unless tau + 1 is too small for its strip
    lower,
    upper,
};

struct AserOptions
{
    AserForm form = AserForm::automatic;
    bool allow_fallback = true;
};

//---------------------------------------------------------------------------//
// Outage
//---------------------------------------------------------------------------//
double outage_probability(LseParams const& lse, double lambda0,
                          double lambda_th);

double outage_asymptotic(
    LseParams const& lse, double lambda0, double lambda_th,
    AsymptoticPrefactor prefactor = AsymptoticPrefactor::exact);

//! Closed form in the per-hop fading and pointing parameters
double diversity_order(HopParams const& hop1, HopParams const& hop2,
                       int n_elements);
//! (tau + 1) / 2
double diversity_order(LseParams const& lse);

/*!
 * OP coding gain such that (G_c lambda0)^(-G_d) equals the asymptote with
 * the 1 / Gamma(tau+1) prefactor. The threshold enters as
 * (lambda_th / Lambda^2)^{G_d}.
 */
double coding_gain_op(LseParams const& lse, double lambda_th, double g_d);

//! Negative log-log slope between two OP samples on a dBm axis
double empirical_diversity_order(double op_hi, double op_lo, double ps_hi_dbm,
                                 double ps_lo_dbm);

//---------------------------------------------------------------------------//
// Symbol error rate
//---------------------------------------------------------------------------//
MetricValue aser(SepDerivative const& deriv, LseParams const& lse,
                 double lambda0, AserOptions const& opts = {});

double aser_rqam(RqamSpec const& spec, LseParams const& lse, double lambda0);
double aser_hqam(HqamSpec const& spec, LseParams const& lse, double lambda0);

//! High-SNR leading term, evaluated at lambda0
AsymptoticResult aser_asymptotic(SepDerivative const& deriv,
                                 LseParams const& lse, double lambda0);
AsymptoticResult aser_rqam_asymptotic(RqamSpec const& spec,
                                      LseParams const& lse, double lambda0);
AsymptoticResult aser_hqam_asymptotic(HqamSpec const& spec,
                                      LseParams const& lse, double lambda0);

//---------------------------------------------------------------------------//
// Capacity
//---------------------------------------------------------------------------//
//! Ergodic capacity in bit/s/Hz
double acc(LseParams const& lse, double lambda0);
MetricValue acc_detailed(LseParams const& lse, double lambda0,
                         bool allow_fallback = true);

//---------------------------------------------------------------------------//
// Independent quadrature oracles
//---------------------------------------------------------------------------//
/*!
 * -int P'(e|l) F(l) dl by adaptive quadrature.
 *
 * decay_rate is the slowest exponential rate of P'; it only positions the
 * subdivision points.
 */
double quadrature_oracle_aser(std::function<double(double)> const& deriv,
                              LseParams const& lse, double lambda0,
                              double decay_rate = 1);
double quadrature_oracle_aser(SepDerivative const& deriv,
                              LseParams const& lse, double lambda0);

//! int (1 - F(l)) / (1 + l) dl / ln 2
double quadrature_oracle_acc(LseParams const& lse, double lambda0);

}  // namespace irsthz
