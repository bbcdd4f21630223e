// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include "irsthz/channel/channel.hpp"
#include "irsthz/montecarlo/philox.hpp"

namespace irsthz
{
// Standard normal (Marsaglia polar method)
double sample_normal(Philox4x32& rng);

// Gamma(shape, 1) by Marsaglia-Tsang; shape < 1 via the U^(1/shape) boost
double sample_gamma(Philox4x32& rng, double shape);

// Envelope Omega (G / mu)^(1/alpha), G ~ Gamma(mu, 1)
double sample_alpha_mu(AlphaMuParams const& fading, Philox4x32& rng);

// S0 U^(1/phi)
double sample_pointing(PointingParams const& pointing, Philox4x32& rng);

//! Joint fading and pointing amplitude of one hop
double sample_hop(HopParams const& hop, Philox4x32& rng);

}  // namespace irsthz
