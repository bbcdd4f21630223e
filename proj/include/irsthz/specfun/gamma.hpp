// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <complex>

namespace irsthz
{

// Principal branch of log Gamma(z), analytic off the non-positive real axis.
// Throws DomainError at the poles z = 0, -1, -2, ...
std::complex<double> log_gamma(std::complex<double> z);

// log |Gamma(x)| for real x; throws DomainError at the poles.
double log_gamma(double x);

// log(1/Gamma(z)) with -inf real part at the poles (where 1/Gamma vanishes)
std::complex<double> log_recip_gamma(std::complex<double> z);

// Regularized lower incomplete gamma P(s, x), s > 0, x >= 0.
double reg_lower_gamma(double s, double x);

// Regularized upper incomplete gamma Q(s, x) = 1 - P(s, x).
double reg_upper_gamma(double s, double x);

// Upper incomplete gamma Gamma(s, x) (not regularized).
double upper_gamma(double s, double x);

}  // namespace irsthz
