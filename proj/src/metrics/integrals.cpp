// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/metrics/integrals.hpp"

#include <cmath>

#include "irsthz/specfun/errors.hpp"
#include "irsthz/specfun/fox_h.hpp"
#include "irsthz/specfun/gamma.hpp"
#include "irsthz/specfun/hypergeometric.hpp"

namespace irsthz
{
namespace
{
constexpr double univariate_tol = 1e-11;
constexpr double bivariate_tol = 1e-9;

void check_link(LseParams const& lse, double lambda0)
{
    if (!(lse.lambda > 0) || !(lse.tau > -1))
        throw DomainError("integral: invalid LSE parameters");
    if (!(lambda0 > 0))
        throw DomainError("integral: lambda0 must be positive");
}

// Kernel Gamma(tau+1+s) Gamma(s) / Gamma(1+s) of the upper incomplete gamma;
// with Gamma(-s) / Gamma(1-s) instead it represents the lower one.
FoxHSpec incomplete_gamma_kernel(double tau, bool lower,
                                 GammaTerm extra_upper)
{
    if (lower)
        return FoxHSpec(1, 2, {extra_upper, {1, 1}}, {{tau + 1, 1}, {0, 1}});
    return FoxHSpec(2, 1, {extra_upper, {1, 1}}, {{tau + 1, 1}, {0, 1}});
}

double i2_impl(double chi1, double chi2, LseParams const& lse, double lambda0,
               double log_scale, bool lower)
{
    check_link(lse, lambda0);
    if (!(chi2 > 0) || !(chi1 > -1))
        throw DomainError("integral_i2: need chi1 > -1 and chi2 > 0");
    auto const spec = incomplete_gamma_kernel(lse.tau, lower,
                                              {-chi1, 0.5});
    double const z = 1 / (lse.lambda * std::sqrt(chi2 * lambda0));
    ContourConfig cfg;
    cfg.target_rel_tol = univariate_tol;
    double const pref = log_scale - (chi1 + 1) * std::log(chi2);
    return fox_h(spec, z, cfg, pref).value;
}

double i4_impl(double chi1, double chi2, double chi3, LseParams const& lse,
               double lambda0, double log_scale, bool lower)
{
    check_link(lse, lambda0);
    if (!(chi3 > 0) || !(chi2 > chi3) || !(chi1 > -1))
        throw DomainError("integral_i4: need chi2 > chi3 > 0, chi1 > -1");
    double const dchi = chi2 - chi3;
    // 1F1(1;3/2;x) e^{-x} = G^{1,1}_{1,2}[x | 1/2; 0, -1/2] / 2
    FoxHSpec kummer(1, 1, {{0.5, 1}}, {{0, 1}, {-0.5, 1}});
    FoxHSpec incomplete = lower
                              ? FoxHSpec(1, 1, {{1, 1}},
                                         {{lse.tau + 1, 1}, {0, 1}})
                              : FoxHSpec(2, 0, {{1, 1}},
                                         {{lse.tau + 1, 1}, {0, 1}});
    BivariateFoxHSpec spec(1, {{-chi1, 1, 0.5}}, {}, std::move(kummer),
                           std::move(incomplete));
    double const z1 = chi3 / dchi;
    double const z2 = 1 / (lse.lambda * std::sqrt(dchi * lambda0));
    BivariateContourConfig cfg;
    cfg.target_rel_tol = bivariate_tol;
    double const pref = log_scale - std::log(2.0) - (1 + chi1) * std::log(dchi);
    auto const r = fox_h_bivariate(spec, z1, z2, cfg, pref);
    if (r.imag_residue > 1e-8 && !r.underflow)
        throw NumericError("integral_i4: imaginary residue too large",
                           r.value, r.imag_residue);
    return r.value;
}
}  // namespace

double integral_i1(double chi1, double chi2)
{
    return std::exp(log_integral_i1(chi1, chi2));
}

double log_integral_i1(double chi1, double chi2)
{
    if (!(chi1 > -1) || !(chi2 > 0))
        throw DomainError("integral_i1: need chi1 > -1 and chi2 > 0");
    return log_gamma(chi1 + 1) - (chi1 + 1) * std::log(chi2);
}

double integral_i2(double chi1, double chi2, LseParams const& lse,
                   double lambda0, double log_scale)
{
    return i2_impl(chi1, chi2, lse, lambda0, log_scale, false);
}

double integral_i2_lower(double chi1, double chi2, LseParams const& lse,
                         double lambda0, double log_scale)
{
    return i2_impl(chi1, chi2, lse, lambda0, log_scale, true);
}

double integral_i3(double chi1, double chi2, double chi3)
{
    return std::exp(log_integral_i3(chi1, chi2, chi3));
}

double log_integral_i3(double chi1, double chi2, double chi3)
{
    if (!(chi3 >= 0) || !(chi3 < chi2))
        throw DomainError("integral_i3: need 0 <= chi3 < chi2");
    return log_integral_i1(chi1, chi2)
           + std::log(hyp2f1(1, chi1 + 1, 1.5, chi3 / chi2));
}

double integral_i4(double chi1, double chi2, double chi3, LseParams const& lse,
                   double lambda0, double log_scale)
{
    return i4_impl(chi1, chi2, chi3, lse, lambda0, log_scale, false);
}

double integral_i4_lower(double chi1, double chi2, double chi3,
                         LseParams const& lse, double lambda0,
                         double log_scale)
{
    return i4_impl(chi1, chi2, chi3, lse, lambda0, log_scale, true);
}

double integral_i5(LseParams const& lse, double lambda0, double log_scale)
{
    check_link(lse, lambda0);
    // Gamma(1+r) Gamma(-r)^2 Gamma(1+tau-2r) / Gamma(1-r) (L^2 l0)^{-r}
    FoxHSpec spec(1, 3, {{1, 1}, {1, 1}, {-lse.tau, 2}}, {{1, 1}, {0, 1}});
    ContourConfig cfg;
    cfg.target_rel_tol = univariate_tol;
    return fox_h(spec, lse.lambda * lse.lambda * lambda0, cfg, log_scale)
        .value;
}

}  // namespace irsthz
