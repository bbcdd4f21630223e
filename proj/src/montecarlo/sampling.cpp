// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/montecarlo/sampling.hpp"

#include <cmath>

namespace irsthz
{
double sample_normal(Philox4x32& rng)
{
    for (;;)
    {
        double const u = 2 * rng.uniform() - 1;
        double const v = 2 * rng.uniform() - 1;
        double const s = u * u + v * v;
        if (s > 0 && s < 1)
            return u * std::sqrt(-2 * std::log(s) / s);
    }
}

double sample_gamma(Philox4x32& rng, double shape)
{
    if (shape < 1)
    {
        double const g = sample_gamma(rng, shape + 1);
        return g * std::pow(rng.uniform(), 1 / shape);
    }
    double const d = shape - 1.0 / 3;
    double const c = 1 / std::sqrt(9 * d);
    for (;;)
    {
        double x, v;
        do
        {
            x = sample_normal(rng);
            v = 1 + c * x;
        } while (v <= 0);
        v = v * v * v;
        double const u = rng.uniform();
        double const x2 = x * x;
        if (u < 1 - 0.0331 * x2 * x2)
            return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1 - v + std::log(v)))
            return d * v;
    }
}

double sample_alpha_mu(AlphaMuParams const& fading, Philox4x32& rng)
{
    double const g = sample_gamma(rng, fading.mu);
    return fading.omega * std::pow(g / fading.mu, 1 / fading.alpha);
}

double sample_pointing(PointingParams const& pointing, Philox4x32& rng)
{
    return pointing.s0 * std::pow(rng.uniform(), 1 / pointing.phi);
}

double sample_hop(HopParams const& hop, Philox4x32& rng)
{
    return sample_alpha_mu(hop.fading, rng)
           * sample_pointing(hop.pointing, rng);
}

}  // namespace irsthz
