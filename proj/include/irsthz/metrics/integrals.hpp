// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include "irsthz/channel/channel.hpp"

namespace irsthz
{
/*!
 * \file integrals.hpp
 * Closed forms of the averaging integrals behind every metric.
 *
 * With x(l) = sqrt(l) / (Lambda sqrt(lambda0)):
 *   I1 = int l^c1 e^{-c2 l} dl
 *   I2 = int l^c1 e^{-c2 l} Gamma(tau+1, x(l)) dl
 *   I3 = int l^c1 e^{-c2 l} 1F1(1; 3/2; c3 l) dl
 *   I4 = int l^c1 e^{-c2 l} 1F1(1; 3/2; c3 l) Gamma(tau+1, x(l)) dl
 *   I5 = int Gamma(tau+1, x(l)) / (1 + l) dl
 *
 * The "lower" variants replace the upper incomplete gamma by the lower one,
 * so that I2 + I2_lower = Gamma(tau+1) I1 and likewise for I4. They come from
 * the same Mellin-Barnes integrand with the contour moved across the pole at
 * s = 0, and they stay accurate when the averaged metric is tiny.
 *
 * The optional log_scale multiplies the Fox-H results by exp(log_scale)
 * inside the contour sum, which keeps 1/Gamma(tau+1) normalizations finite
 * for large tau.
 */

double integral_i1(double chi1, double chi2);
double log_integral_i1(double chi1, double chi2);

double integral_i2(double chi1, double chi2, LseParams const& lse,
                   double lambda0, double log_scale = 0);
double integral_i2_lower(double chi1, double chi2, LseParams const& lse,
                         double lambda0, double log_scale = 0);

double integral_i3(double chi1, double chi2, double chi3);
double log_integral_i3(double chi1, double chi2, double chi3);

double integral_i4(double chi1, double chi2, double chi3, LseParams const& lse,
                   double lambda0, double log_scale = 0);
double integral_i4_lower(double chi1, double chi2, double chi3,
                         LseParams const& lse, double lambda0,
                         double log_scale = 0);

double integral_i5(LseParams const& lse, double lambda0, double log_scale = 0);

}  // namespace irsthz
