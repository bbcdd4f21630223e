// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <vector>

namespace irsthz
{
//---------------------------------------------------------------------------//
// Building blocks of a conditional SEP derivative P'(e|lambda)
//---------------------------------------------------------------------------//
//! coef * lambda^(-1/2) * exp(-chi2 * lambda)
struct PowerExpTerm
{
    double coef;
    double chi2;
};

//! coef * exp(-chi2 * lambda) * 1F1(1; 3/2; chi3 * lambda), chi2 > chi3 > 0
struct HyperExpTerm
{
    double coef;
    double chi2;
    double chi3;
};

/*!
 * Derivative of a conditional symbol error probability.
 *
 * Both RQAM and HQAM derivatives are sums of the two term shapes above, so
 * every averaged metric is assembled term by term from the same integrals.
 */
struct SepDerivative
{
    std::vector<PowerExpTerm> power;
    std::vector<HyperExpTerm> hyper;

    double operator()(double lambda) const;
    //! Conditional SEP at zero SNR, i.e. the integral of -P' over (0, inf)
    double sep_at_zero() const;
    //! Slowest exponential decay rate among the terms
    double decay_rate() const;
};

//---------------------------------------------------------------------------//
// Rectangular QAM
//---------------------------------------------------------------------------//
enum class RqamVariant
{
    standard,       //!< a = sqrt(6 / ((MI^2-1) + (MQ^2-1) beta^2))
    paper_literal,  //!< a = sqrt(6 / ((MI^2-1)^2 + (MQ^2-1) beta^2))
};

struct RqamSpec
{
    int mi = 4;
    int mq = 4;
    double beta = 1.0;
    RqamVariant variant = RqamVariant::standard;

    void validate() const;
};

struct RqamConstants
{
    double a, b, p, q, d, f, g;
};

RqamConstants rqam_constants(RqamSpec const& spec);
SepDerivative rqam_sep_derivative(RqamSpec const& spec);
double rqam_cond_sep_derivative(RqamSpec const& spec, double lambda);
// 2p Q(a sqrt(l)) + 2q Q(b sqrt(l)) - 4pq Q(a sqrt(l)) Q(b sqrt(l))
double rqam_cond_sep(RqamSpec const& spec, double lambda);

//---------------------------------------------------------------------------//
// Hexagonal QAM
//---------------------------------------------------------------------------//
struct HqamSpec
{
    int m = 4;

    void validate() const;
};

struct HqamConstants
{
    double alpha_h, b, b_c;
};

HqamConstants hqam_constants(HqamSpec const& spec);
SepDerivative hqam_sep_derivative(HqamSpec const& spec);
double hqam_cond_sep_derivative(HqamSpec const& spec, double lambda);

// Gaussian tail probability
double q_function(double x);

}  // namespace irsthz
