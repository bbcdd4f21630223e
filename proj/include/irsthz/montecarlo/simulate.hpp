// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <cstdint>
#include <vector>

#include "irsthz/channel/channel.hpp"
#include "irsthz/metrics/modulation.hpp"
#include "irsthz/montecarlo/philox.hpp"

namespace irsthz
{
//---------------------------------------------------------------------------//
/*!
 * IRS phase compensation quality.
 *
 * The residual phase of every element is width() * (U - 1/2): zero for ideal
 * co-phasing, 2 pi / 2^Q for Q-bit rounding and 2 pi for random phases. The
 * uniform draw is consumed in all three cases so that runs with different
 * models share random numbers.
 */
struct PhaseModel
{
    enum class Kind
    {
        ideal,
        quantized,
        random,
    };

    Kind kind = Kind::ideal;
    int q_bits = 0;

    static PhaseModel ideal() { return {}; }
    static PhaseModel quantized(int bits) { return {Kind::quantized, bits}; }
    static PhaseModel random() { return {Kind::random, 0}; }

    void validate() const;
    double width() const;
};

struct McConfig
{
    std::int64_t trials = 1'000'000;
    std::uint64_t seed = 20260101;
    //! Trials per independent RNG stream
    std::int64_t chunk = 1 << 16;
    //! Worker threads; 0 uses the hardware concurrency
    int threads = 0;

    void validate() const;
};

struct McEstimate
{
    double value = 0;
    double std_error = 0;
    std::int64_t trials_used = 0;
};

//---------------------------------------------------------------------------//
// Sum over elements of the two-hop amplitude products, after phase errors
double sample_composite_gain(Scenario const& sc, PhaseModel const& phase,
                             Philox4x32& rng);

// All composite gains of a run, in deterministic chunk order
std::vector<double> sample_composite_gains(Scenario const& sc,
                                           PhaseModel const& phase,
                                           McConfig const& mc);

//---------------------------------------------------------------------------//
// All simulations take the deterministic SNR scale lambda0 (see snr_scale),
// so that lambda = lambda0 B^2 for each sampled composite gain B.
//---------------------------------------------------------------------------//
McEstimate simulate_outage(Scenario const& sc, double lambda0,
                           PhaseModel const& phase, double lambda_th,
                           McConfig const& mc);

//! Symbol-level threshold detection of a random RQAM symbol
McEstimate simulate_ser_rqam(RqamSpec const& spec, Scenario const& sc,
                             double lambda0, PhaseModel const& phase,
                             McConfig const& mc);

//! Conditional HQAM SEP averaged over sampled channel states
McEstimate simulate_ser_hqam(HqamSpec const& spec, Scenario const& sc,
                             double lambda0, PhaseModel const& phase,
                             McConfig const& mc);

McEstimate simulate_capacity(Scenario const& sc, double lambda0,
                             PhaseModel const& phase, McConfig const& mc);

//---------------------------------------------------------------------------//
/*!
 * Tabulated conditional SEP P(e|l) = int_l^inf -P'(e|u) du.
 *
 * Nodes are uniform in t = sqrt(l); values between nodes use cubic Hermite
 * interpolation with the exact derivative, clamped to the node values so the
 * interpolant stays monotone. Beyond the last node the tail bound is below
 * 1e-300 and zero is returned.
 */
class ConditionalSepTable
{
  public:
    explicit ConditionalSepTable(SepDerivative deriv);

    double operator()(double lambda) const;
    double at_zero() const { return values_.front(); }
    double max_lambda() const { return t_.back() * t_.back(); }

  private:
    SepDerivative deriv_;
    std::vector<double> t_;
    std::vector<double> values_;
    std::vector<double> slopes_;  // dP/dt at nodes
};

}  // namespace irsthz
