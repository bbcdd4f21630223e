// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/metrics/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "irsthz/specfun/errors.hpp"
#include "irsthz/specfun/hypergeometric.hpp"

namespace irsthz
{
namespace
{
constexpr double sqrt_pi = 1.7724538509055160273;
constexpr double sqrt_two_pi = 2.5066282746310005024;

bool is_power_of_two(int v)
{
    return v > 0 && (v & (v - 1)) == 0;
}

// exp(-c2 l) 1F1(1; 3/2; c3 l); the erf form avoids overflow for large l
double damped_kummer(double c2, double c3, double lambda)
{
    double const x = c3 * lambda;
    if (x <= 30)
        return std::exp(-c2 * lambda) * hyp1f1(1, 1.5, x);
    double const r = std::sqrt(x);
    return sqrt_pi * std::exp(-(c2 - c3) * lambda) * std::erf(r) / (2 * r);
}

// Integral of lambda^(-1/2) e^(-c lambda) and of e^(-c2 l) 1F1(1;3/2;c3 l)
double power_mass(double c)
{
    return sqrt_pi / std::sqrt(c);
}

double hyper_mass(double c2, double c3)
{
    // Gamma(1)/c2 * 2F1(1, 1; 3/2; x) with 2F1 = asin(sqrt x)/sqrt(x (1-x))
    double const x = c3 / c2;
    return std::asin(std::sqrt(x)) / std::sqrt(x * (1 - x)) / c2;
}
}  // namespace

double q_function(double x)
{
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

//---------------------------------------------------------------------------//
double SepDerivative::operator()(double lambda) const
{
    if (!(lambda > 0))
        throw DomainError("sep derivative: lambda must be positive");
    double sum = 0;
    for (auto const& t : power)
        sum += t.coef * std::exp(-t.chi2 * lambda) / std::sqrt(lambda);
    for (auto const& t : hyper)
        sum += t.coef * damped_kummer(t.chi2, t.chi3, lambda);
    return sum;
}

double SepDerivative::sep_at_zero() const
{
    double sum = 0;
    for (auto const& t : power)
        sum -= t.coef * power_mass(t.chi2);
    for (auto const& t : hyper)
        sum -= t.coef * hyper_mass(t.chi2, t.chi3);
    return sum;
}

double SepDerivative::decay_rate() const
{
    double rate = std::numeric_limits<double>::infinity();
    for (auto const& t : power)
        rate = std::min(rate, t.chi2);
    for (auto const& t : hyper)
        rate = std::min(rate, t.chi2 - t.chi3);
    return rate;
}

//---------------------------------------------------------------------------//
// RQAM
//---------------------------------------------------------------------------//
void RqamSpec::validate() const
{
    require(mi >= 2 && mq >= 2, "rqam: M_I and M_Q must be at least 2");
    require(is_power_of_two(mi) && is_power_of_two(mq),
            "rqam: M_I and M_Q must be powers of two");
    require(beta > 0 && std::isfinite(beta), "rqam: beta must be positive");
}

RqamConstants rqam_constants(RqamSpec const& spec)
{
    spec.validate();
    double const ei = static_cast<double>(spec.mi) * spec.mi - 1;
    double const eq = static_cast<double>(spec.mq) * spec.mq - 1;
    double const in_phase = spec.variant == RqamVariant::paper_literal
                                ? ei * ei
                                : ei;
    RqamConstants c;
    c.a = std::sqrt(6 / (in_phase + eq * spec.beta * spec.beta));
    c.b = spec.beta * c.a;
    c.p = 1 - 1.0 / spec.mi;
    c.q = 1 - 1.0 / spec.mq;
    c.d = c.a * c.p * (c.q - 1) / sqrt_two_pi;
    c.f = c.b * (c.p - 1) * c.q / sqrt_two_pi;
    c.g = c.a * c.b * c.p * c.q / std::numbers::pi;
    return c;
}

/*!
 * Derivative of 2pQ(a sqrt l) + 2qQ(b sqrt l) - 4pq Q(a sqrt l) Q(b sqrt l).
 *
 * The cross term differentiates to G e^{-(a^2+b^2) l / 2} [1F1 + 1F1] with
 * G = abpq / pi and no further 1/sqrt(pi) factor; this is the coefficient
 * that makes the total mass equal p + q - pq.
 */
SepDerivative rqam_sep_derivative(RqamSpec const& spec)
{
    auto const c = rqam_constants(spec);
    double const a2 = c.a * c.a / 2;
    double const b2 = c.b * c.b / 2;
    SepDerivative d;
    d.power = {{c.d, a2}, {c.f, b2}};
    d.hyper = {{-c.g, a2 + b2, a2}, {-c.g, a2 + b2, b2}};
    return d;
}

double rqam_cond_sep_derivative(RqamSpec const& spec, double lambda)
{
    return rqam_sep_derivative(spec)(lambda);
}

double rqam_cond_sep(RqamSpec const& spec, double lambda)
{
    auto const c = rqam_constants(spec);
    double const s = std::sqrt(std::max(lambda, 0.0));
    double const qa = q_function(c.a * s);
    double const qb = q_function(c.b * s);
    return 2 * c.p * qa + 2 * c.q * qb - 4 * c.p * c.q * qa * qb;
}

//---------------------------------------------------------------------------//
// HQAM
//---------------------------------------------------------------------------//
void HqamSpec::validate() const
{
    require(m >= 4 && is_power_of_two(m),
            "hqam: M must be a power of two and at least 4");
}

HqamConstants hqam_constants(HqamSpec const& spec)
{
    spec.validate();
    double const m = spec.m;
    double const rm = std::sqrt(m);
    return {24 / (7 * m - 4), 2 * (3 - 4 / rm + 1 / m),
            6 * (1 - 1 / rm) * (1 - 1 / rm)};
}

SepDerivative hqam_sep_derivative(HqamSpec const& spec)
{
    auto const c = hqam_constants(spec);
    double const al = c.alpha_h;
    double const pi = std::numbers::pi;
    double const sqrt3 = std::numbers::sqrt3;
    SepDerivative d;
    d.power = {
        {std::sqrt(al / (2 * pi)) * (c.b_c - c.b) / 2, al / 2},
        {-std::sqrt(al / (3 * pi)) * c.b_c / 3, al / 3},
        {std::sqrt(al / (6 * pi)) * c.b_c / 2, al / 6},
    };
    double const k1 = c.b_c * al / (2 * sqrt3 * pi);
    double const k2 = 2 * c.b_c * al / (9 * pi);
    d.hyper = {
        {-k1, 2 * al / 3, al / 2},
        {-k1, 2 * al / 3, al / 6},
        {k2, 2 * al / 3, al / 3},
    };
    return d;
}

double hqam_cond_sep_derivative(HqamSpec const& spec, double lambda)
{
    return hqam_sep_derivative(spec)(lambda);
}

}  // namespace irsthz
