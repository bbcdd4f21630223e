// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "irsthz/metrics/integrals.hpp"
#include "irsthz/specfun/errors.hpp"
#include "irsthz/specfun/gamma.hpp"
#include "irsthz/specfun/quadrature.hpp"

namespace irsthz
{
namespace
{
// Below this shape the lower-form strip (-tau-1, 0) is too narrow
constexpr double min_lower_form_shape = 0.5;

void check_link(LseParams const& lse, double lambda0)
{
    if (!(lse.lambda > 0) || !(lse.tau > -1))
        throw DomainError("metric: invalid LSE parameters");
    if (!(lambda0 > 0) || !std::isfinite(lambda0))
        throw DomainError("metric: lambda0 must be positive and finite");
}

// Sum of adaptive pieces over sorted breakpoints, then a mapped tail
double piecewise_to_infinity(std::function<double(double)> const& f,
                             std::vector<double> cuts, char const* what)
{
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    QuadOptions opts;
    opts.rel_tol = 1e-12;
    opts.max_intervals = 4000;
    double total = 0;
    double err = 0;
    double lo = 0;
    for (double c : cuts)
    {
        if (!(c > lo))
            continue;
        auto const r = integrate(f, lo, c, opts);
        total += r.value;
        err += r.abs_error;
        lo = c;
    }
    auto const tail = integrate_to_infinity(f, lo, opts);
    total += tail.value;
    err += tail.abs_error;
    if (!std::isfinite(total) || err > 1e-9 * std::abs(total) + 1e-300)
        throw NumericError(std::string(what) + ": quadrature did not converge",
                           total, err);
    return total;
}

// Points where F(u^2) turns on: x = u / (Lambda sqrt(lambda0)) ~ tau + 1
std::vector<double> cdf_cuts(LseParams const& lse, double lambda0)
{
    double const scale = lse.lambda * std::sqrt(lambda0);
    double const k = lse.tau + 1;
    double const spread = 6 * std::sqrt(k);
    return {scale * std::max(k - spread, 0.0), scale * k,
            scale * (k + spread)};
}

double signed_log_sum(std::vector<double> const& coef,
                      std::vector<double> const& logs, double* sign)
{
    double const m = *std::max_element(logs.begin(), logs.end());
    double s = 0;
    for (std::size_t i = 0; i < coef.size(); ++i)
        s += coef[i] * std::exp(logs[i] - m);
    *sign = s < 0 ? -1 : 1;
    return m + std::log(std::abs(s));
}
}  // namespace

char const* to_string(EvalPath p)
{
    switch (p)
    {
        case EvalPath::closed_form: return "closed_form";
        case EvalPath::closed_form_upper: return "closed_form_upper";
        case EvalPath::quadrature_fallback: return "quadrature_fallback";
    }
    return "unknown";
}

//---------------------------------------------------------------------------//
double outage_probability(LseParams const& lse, double lambda0,
                          double lambda_th)
{
    check_link(lse, lambda0);
    if (!(lambda_th >= 0))
        throw DomainError("outage_probability: threshold must be >= 0");
    return snr_cdf(lambda_th, lse, lambda0);
}

double outage_asymptotic(LseParams const& lse, double lambda0,
                         double lambda_th, AsymptoticPrefactor prefactor)
{
    check_link(lse, lambda0);
    if (!(lambda_th >= 0))
        throw DomainError("outage_asymptotic: threshold must be >= 0");
    if (lambda_th == 0)
        return 0;
    double const k = lse.tau + 1;
    double const lg = prefactor == AsymptoticPrefactor::exact
                          ? log_gamma(k + 1)
                          : log_gamma(k);
    double const x = lambda_th / (lse.lambda * lse.lambda * lambda0);
    return std::exp(0.5 * k * std::log(x) - lg);
}

double diversity_order(HopParams const& hop1, HopParams const& hop2,
                       int n_elements)
{
    hop1.validate();
    hop2.validate();
    if (n_elements < 1)
        throw DomainError("diversity_order: need at least one element");
    double log_prod = 0;
    for (auto const* h : {&hop1, &hop2})
    {
        double const a = h->fading.alpha;
        double const mu = h->fading.mu;
        double const phi = h->pointing.phi;
        log_prod += log_gamma(2 / a + mu) + log_gamma(mu)
                    - 2 * log_gamma(1 / a + mu) + 2 * std::log(phi + 1)
                    - std::log(phi) - std::log(phi + 2);
    }
    return 0.5 * n_elements / std::expm1(log_prod);
}

double diversity_order(LseParams const& lse)
{
    return (lse.tau + 1) / 2;
}

double coding_gain_op(LseParams const& lse, double lambda_th, double g_d)
{
    if (!(g_d > 0))
        throw DomainError("coding_gain_op: diversity order must be positive");
    if (!(lambda_th > 0) || !(lse.lambda > 0))
        throw DomainError("coding_gain_op: need positive threshold and scale");
    double const log_inner = g_d * std::log(lambda_th / (lse.lambda * lse.lambda))
                             - log_gamma(lse.tau + 1);
    return std::exp(-log_inner / g_d);
}

double empirical_diversity_order(double op_hi, double op_lo, double ps_hi_dbm,
                                 double ps_lo_dbm)
{
    if (!(op_hi > 0) || !(op_lo > 0))
        throw DomainError("empirical_diversity_order: OP must be positive");
    if (!(ps_hi_dbm > ps_lo_dbm))
        throw DomainError("empirical_diversity_order: need ps_hi > ps_lo");
    return -10 * (std::log10(op_hi) - std::log10(op_lo))
           / (ps_hi_dbm - ps_lo_dbm);
}

//---------------------------------------------------------------------------//
MetricValue aser(SepDerivative const& deriv, LseParams const& lse,
                 double lambda0, AserOptions const& opts)
{
    check_link(lse, lambda0);
    bool lower = opts.form == AserForm::lower
                 || (opts.form == AserForm::automatic
                     && lse.tau + 1 >= min_lower_form_shape);
    double const log_norm = -log_gamma(lse.tau + 1);
    try
    {
        double sum = 0;
        for (auto const& t : deriv.power)
        {
            sum += t.coef
                   * (lower ? integral_i2_lower(-0.5, t.chi2, lse, lambda0,
                                                log_norm)
                            : integral_i2(-0.5, t.chi2, lse, lambda0,
                                          log_norm));
        }
        for (auto const& t : deriv.hyper)
        {
            sum += t.coef
                   * (lower ? integral_i4_lower(0, t.chi2, t.chi3, lse,
                                                lambda0, log_norm)
                            : integral_i4(0, t.chi2, t.chi3, lse, lambda0,
                                          log_norm));
        }
        if (lower)
            return {-sum, EvalPath::closed_form};
        return {deriv.sep_at_zero() + sum, EvalPath::closed_form_upper};
    }
    catch (NumericError const&)
    {
        if (!opts.allow_fallback)
            throw;
    }
    catch (DomainError const&)
    {
        if (!opts.allow_fallback)
            throw;
    }
    return {quadrature_oracle_aser(deriv, lse, lambda0),
            EvalPath::quadrature_fallback};
}

double aser_rqam(RqamSpec const& spec, LseParams const& lse, double lambda0)
{
    return aser(rqam_sep_derivative(spec), lse, lambda0).value;
}

double aser_hqam(HqamSpec const& spec, LseParams const& lse, double lambda0)
{
    return aser(hqam_sep_derivative(spec), lse, lambda0).value;
}

AsymptoticResult aser_asymptotic(SepDerivative const& deriv,
                                 LseParams const& lse, double lambda0)
{
    check_link(lse, lambda0);
    double const k = lse.tau + 1;
    std::vector<double> coef;
    std::vector<double> logs;
    for (auto const& t : deriv.power)
    {
        coef.push_back(t.coef);
        logs.push_back(log_integral_i1(lse.tau / 2, t.chi2));
    }
    for (auto const& t : deriv.hyper)
    {
        coef.push_back(t.coef);
        logs.push_back(log_integral_i3(k / 2, t.chi2, t.chi3));
    }
    for (double l : logs)
        if (!std::isfinite(l))
            throw NumericError("aser_asymptotic: term overflow");
    double sign = 1;
    double const log_bracket = signed_log_sum(coef, logs, &sign);
    if (sign > 0)
        throw NumericError("aser_asymptotic: leading coefficient not positive");
    // P = K lambda0^{-G_d}
    double const log_k = log_bracket - log_gamma(k + 1)
                         - k * std::log(lse.lambda);
    AsymptoticResult r;
    r.diversity_order = k / 2;
    r.coding_gain = std::exp(-log_k / r.diversity_order);
    r.value_at = std::pair{
        lambda0, std::exp(log_k - r.diversity_order * std::log(lambda0))};
    return r;
}

AsymptoticResult aser_rqam_asymptotic(RqamSpec const& spec,
                                      LseParams const& lse, double lambda0)
{
    return aser_asymptotic(rqam_sep_derivative(spec), lse, lambda0);
}

AsymptoticResult aser_hqam_asymptotic(HqamSpec const& spec,
                                      LseParams const& lse, double lambda0)
{
    return aser_asymptotic(hqam_sep_derivative(spec), lse, lambda0);
}

//---------------------------------------------------------------------------//
double acc(LseParams const& lse, double lambda0)
{
    return acc_detailed(lse, lambda0).value;
}

MetricValue acc_detailed(LseParams const& lse, double lambda0,
                         bool allow_fallback)
{
    check_link(lse, lambda0);
    try
    {
        double const i5 = integral_i5(lse, lambda0, -log_gamma(lse.tau + 1));
        return {i5 / std::numbers::ln2, EvalPath::closed_form};
    }
    catch (NumericError const&)
    {
        if (!allow_fallback)
            throw;
    }
    return {quadrature_oracle_acc(lse, lambda0),
            EvalPath::quadrature_fallback};
}

//---------------------------------------------------------------------------//
double quadrature_oracle_aser(std::function<double(double)> const& deriv,
                              LseParams const& lse, double lambda0,
                              double decay_rate)
{
    check_link(lse, lambda0);
    if (!(decay_rate > 0))
        throw DomainError("quadrature_oracle_aser: decay rate must be > 0");
    // lambda = u^2 removes the lambda^{-1/2} endpoint singularity
    auto integrand = [&](double u) -> double {
        if (u <= 0)
            return 0;
        double const l = u * u;
        double const f = snr_cdf(l, lse, lambda0);
        if (f == 0)
            return 0;
        return -2 * u * deriv(l) * f;
    };
    auto cuts = cdf_cuts(lse, lambda0);
    double const up = 1 / std::sqrt(decay_rate);
    cuts.push_back(up);
    cuts.push_back(10 * up);
    return piecewise_to_infinity(integrand, cuts, "quadrature_oracle_aser");
}

double quadrature_oracle_aser(SepDerivative const& deriv,
                              LseParams const& lse, double lambda0)
{
    return quadrature_oracle_aser(
        [&deriv](double l) { return deriv(l); }, lse, lambda0,
        deriv.decay_rate());
}

double quadrature_oracle_acc(LseParams const& lse, double lambda0)
{
    check_link(lse, lambda0);
    double const scale = lse.lambda * std::sqrt(lambda0);
    auto integrand = [&](double u) -> double {
        if (u <= 0)
            return 0;
        return 2 * u / (1 + u * u) * reg_upper_gamma(lse.tau + 1, u / scale);
    };
    auto cuts = cdf_cuts(lse, lambda0);
    cuts.push_back(1);
    return piecewise_to_infinity(integrand, cuts, "quadrature_oracle_acc")
           / std::numbers::ln2;
}

}  // namespace irsthz
