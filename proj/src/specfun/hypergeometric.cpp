// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/specfun/hypergeometric.hpp"

#include <cmath>

#include "irsthz/specfun/errors.hpp"
#include "irsthz/specfun/gamma.hpp"

namespace irsthz
{
namespace
{
constexpr double series_eps = 1e-17;
constexpr int max_series_terms = 2000000;

double kummer_series(double a, double b, double x)
{
    double term = 1;
    double sum = 1;
    double prev = 0;
    for (int k = 0; k < max_series_terms; ++k)
    {
        term *= (a + k) / (b + k) * x / (k + 1);
        prev = sum;
        sum += term;
        // Terms may grow before they shrink; stop only once past the peak
        if (std::abs(term) <= series_eps * std::abs(sum) && k + 1 > x)
            return sum;
        if (term == 0)
            return sum;
    }
    throw NumericError("hyp1f1: series did not converge", sum, prev);
}

double gauss_series(double a, double b, double c, double x)
{
    double term = 1;
    double sum = 1;
    double prev = 0;
    for (int k = 0; k < max_series_terms; ++k)
    {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x;
        prev = sum;
        sum += term;
        double const ratio = std::abs((a + k + 1) * (b + k + 1)
                                      / ((c + k + 1) * (k + 2)) * x);
        if (term == 0
            || (ratio < 1 && std::abs(term) * ratio / (1 - ratio)
                                 <= series_eps * std::abs(sum)))
            return sum;
    }
    throw NumericError("hyp2f1: series did not converge", sum, prev);
}

// Gamma ratio product with sign tracking (arguments may be negative)
double gamma_ratio(double n1, double n2, double d1, double d2)
{
    auto sgn = [](double v) {
        if (v > 0)
            return 1.0;
        // Gamma alternates sign between poles on the negative axis
        return (static_cast<long>(std::floor(v)) % 2 == 0) ? 1.0 : -1.0;
    };
    double const lg = log_gamma(n1) + log_gamma(n2) - log_gamma(d1)
                      - log_gamma(d2);
    return sgn(n1) * sgn(n2) * sgn(d1) * sgn(d2) * std::exp(lg);
}

bool is_pole(double v)
{
    return v <= 0 && v == std::floor(v);
}
}  // namespace

double hyp1f1(double a, double b, double x)
{
    if (!(b > 0))
        throw DomainError("hyp1f1: requires b > 0");
    if (x < 0)
        return std::exp(x) * kummer_series(b - a, b, -x);
    return kummer_series(a, b, x);
}

/*!
 * Gauss series near the origin, connection formula x -> 1 - x near one.
 *
 * When c - a - b is close to an integer the connection formula degenerates
 * (its two gamma prefactors blow up with opposite signs), so the direct
 * series is summed instead; it converges for any x < 1, only more slowly.
 */
double hyp2f1(double a, double b, double c, double x)
{
    if (!(x >= 0) || !(x < 1))
        throw DomainError("hyp2f1: requires 0 <= x < 1");
    if (!(c > 0))
        throw DomainError("hyp2f1: requires c > 0");
    if (x <= 0.75)
        return gauss_series(a, b, c, x);

    double const d = c - a - b;
    if (std::abs(d - std::round(d)) < 0.05 || is_pole(c - a) || is_pole(c - b)
        || is_pole(a) || is_pole(b))
        return gauss_series(a, b, c, x);

    double const y = 1 - x;
    double const t1 = gamma_ratio(c, d, c - a, c - b)
                      * gauss_series(a, b, 1 - d, y);
    double const t2 = std::pow(y, d) * gamma_ratio(c, -d, a, b)
                      * gauss_series(c - a, c - b, 1 + d, y);
    return t1 + t2;
}

}  // namespace irsthz
