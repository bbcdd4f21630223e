// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include "irsthz/channel/channel.hpp"
#include "irsthz/specfun/errors.hpp"

using namespace irsthz;
using doctest::Approx;

namespace
{
HopParams table_hop()
{
    HopParams h;
    h.fading = {3.0, 3.0, 1.0};
    h.pointing = {15.0, 0.8};
    return h;
}

// E[R^n] of the alpha-mu envelope by quadrature of its density
double alpha_mu_moment_quadrature(AlphaMuParams const& f, double n)
{
    auto pdf = [&](double r) {
        if (r <= 0)
            return 0.0;
        double const lg = std::log(f.alpha) + f.mu * std::log(f.mu)
                          + (f.alpha * f.mu - 1) * std::log(r)
                          - f.alpha * f.mu * std::log(f.omega)
                          - boost::math::lgamma(f.mu)
                          - f.mu * std::pow(r / f.omega, f.alpha);
        return std::pow(r, n) * std::exp(lg);
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        pdf, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-13);
}
}  // namespace

TEST_CASE("path_loss_coeff")
{
    double const g = std::pow(10.0, 5.5);
    double const hl = path_loss_coeff(275e9, 15, g, g, 2);
    // Exact speed of light; hand arithmetic with c = 3e8 gives 1.830
    double const expect = speed_of_light * g / (4 * std::numbers::pi * 275e9 * 15);
    CHECK(hl == Approx(expect).epsilon(1e-14));
    CHECK(hl == Approx(1.830).epsilon(1e-3));

    // The amplitude falls as d^(-eta/2)
    CHECK(path_loss_coeff(275e9, 7.5, 1, 1, 4)
          == Approx(speed_of_light / (4 * std::numbers::pi * 275e9 * 7.5 * 7.5))
                 .epsilon(1e-14));
    CHECK(path_loss_coeff(275e9, 30, g, g, 2)
          == Approx(hl / 2).epsilon(1e-14));
}

TEST_CASE("absorption_coeff")
{
    CHECK(absorption_coeff(0, 30) == 1);
    CHECK(absorption_coeff(0.1, 20) == Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(absorption_coeff(0.02, 10) == Approx(0.9048).epsilon(1e-4));
}

TEST_CASE("hop_moment: examples")
{
    HopParams h;
    h.fading = {2.0, 1.0, 1.0};
    h.pointing = {1e6, 1.0};
    CHECK(std::abs(hop_moment(h, 2) - 1) < 2e-6);

    h.pointing = {14.23, 0.79};
    double const expect = 0.79 * (14.23 / 15.23) * std::tgamma(1.5);
    CHECK(hop_moment(h, 1) == Approx(expect).epsilon(1e-13));
    CHECK(hop_moment(h, 1) == Approx(0.6541).epsilon(1e-4));

    // Pointing collapse leaves the pure alpha-mu mean
    h.fading = {3.0, 3.5, 1.3};
    h.pointing = {1e12, 1.0};
    double const am = 1.3 * std::tgamma(3.5 + 1 / 3.0)
                      / (std::pow(3.5, 1 / 3.0) * std::tgamma(3.5));
    CHECK(hop_moment(h, 1) == Approx(am).epsilon(1e-10));
}

TEST_CASE("hop_moment: agrees with density quadrature")
{
    for (auto [a, m, w] : {std::tuple{2.0, 1.0, 1.0}, {3.0, 3.0, 1.0},
                           {1.0, 1.04, 1.0}, {2.5, 0.7, 1.4}})
    {
        HopParams h;
        h.fading = {a, m, w};
        h.pointing = {15.0, 0.8};
        for (int n : {1, 2})
        {
            CAPTURE(a);
            CAPTURE(m);
            CAPTURE(n);
            double const pointing = 15.0 / (15.0 + n) * std::pow(0.8, n);
            CHECK(hop_moment(h, n)
                  == Approx(pointing * alpha_mu_moment_quadrature(h.fading, n))
                         .epsilon(1e-9));
        }
    }
}

TEST_CASE("hop_moment: variance is nonnegative across a grid")
{
    for (double a : {0.5, 1.0, 2.0, 3.5})
        for (double m : {0.6, 1.0, 3.0})
            for (double phi : {1.0, 4.0, 18.0})
            {
                HopParams h;
                h.fading = {a, m, 1.0};
                h.pointing = {phi, 0.7};
                double const m1 = hop_moment(h, 1);
                CHECK(hop_moment(h, 2) >= m1 * m1);
            }
}

TEST_CASE("product_stats")
{
    auto d = product_stats({1, 0}, {1, 0});
    CHECK(d.mean == 1);
    CHECK(d.variance == 0);

    double const m = 0.7;
    double const v = 0.2;
    auto s = product_stats({m, v}, {m, v});
    CHECK(s.mean == Approx(m * m));
    CHECK(s.variance == Approx(v * v + 2 * v * m * m).epsilon(1e-14));
}

TEST_CASE("product_stats: table hops against sampling")
{
    // Independent sampler: std::gamma_distribution and inverse-CDF pointing
    HopParams const h = table_hop();
    Moments const exact = product_stats(hop_moments(h), hop_moments(h));
    std::mt19937_64 gen(12345);
    std::gamma_distribution<double> gamma(h.fading.mu, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto draw = [&] {
        double const r = std::pow(gamma(gen) / h.fading.mu, 1 / h.fading.alpha);
        double const p = h.pointing.s0 * std::pow(unif(gen), 1 / h.pointing.phi);
        return r * p;
    };
    int const n = 1'000'000;
    double s1 = 0;
    double s2 = 0;
    for (int i = 0; i < n; ++i)
    {
        double const x = draw() * draw();
        s1 += x;
        s2 += x * x;
    }
    double const mean = s1 / n;
    double const var = s2 / n - mean * mean;
    double const se = std::sqrt(var / n);
    CHECK(std::abs(mean - exact.mean) < 3 * se);
    // Variance estimator error ~ sqrt((m4 - v^2) / n); 3% is many sigma here
    CHECK(var == Approx(exact.variance).epsilon(0.03));
}

TEST_CASE("lse_params: examples and scaling")
{
    auto a = lse_params(4, Moments{1, 1});
    CHECK(a.lambda == Approx(1));
    CHECK(a.tau == Approx(3));

    auto b = lse_params(1, Moments{2, 1});
    CHECK(b.lambda == Approx(0.5));
    CHECK(b.tau == Approx(3));

    Moments const h{0.41, 0.037};
    auto n = lse_params(7, h);
    auto n2 = lse_params(14, h);
    CHECK(n2.tau + 1 == Approx(2 * (n.tau + 1)).epsilon(1e-14));

    CHECK_THROWS_AS(lse_params(4, Moments{1, 0}), DegenerateChannelError);
}

TEST_CASE("lse_params: symmetric under hop relabeling")
{
    Scenario sc;
    sc.hop1 = table_hop();
    sc.hop2 = table_hop();
    sc.hop2.fading = {1.5, 2.0, 1.1};
    sc.hop2.pointing = {6.0, 0.65};
    Scenario swapped = sc;
    std::swap(swapped.hop1, swapped.hop2);
    auto p = lse_params(sc);
    auto q = lse_params(swapped);
    CHECK(p.tau == Approx(q.tau).epsilon(1e-14));
    CHECK(p.lambda == Approx(q.lambda).epsilon(1e-14));
}

TEST_CASE("snr_scale and link_gain")
{
    Scenario sc;
    sc.hop1 = table_hop();
    sc.hop2 = table_hop();
    double const g = std::pow(10.0, 5.5);
    for (HopParams* h : {&sc.hop1, &sc.hop2})
    {
        h->tx_gain_linear = g;
        h->rx_gain_linear = g;
    }

    double const hl1 = path_loss_coeff(275e9, 15, g, g, 2);
    double const hl2 = hl1;
    double const ha = absorption_coeff(0.0033, 30);
    double const gain = std::pow(ha * hl1 * hl2, 2);
    CHECK(link_gain(sc) == Approx(gain).epsilon(1e-13));

    double const ps = dbm_to_watt(30);
    CHECK(ps == Approx(1.0).epsilon(1e-15));
    double const l0 = snr_scale(sc, ps);
    CHECK(l0 == Approx(ps / 6.08e-6 * gain).epsilon(1e-13));
    // Regression pin for the table link at 30 dBm
    CHECK(l0 == Approx(1.6666669e6).epsilon(1e-6));

    // Unit path loss: the scale is the transmit SNR times h_a^2
    Scenario unit;
    unit.hop1 = table_hop();
    unit.hop2 = table_hop();
    unit.atmosphere.k_alpha_per_m = 0;
    unit.freq_hz = speed_of_light / (4 * std::numbers::pi);
    unit.hop1.distance_m = 1;
    unit.hop2.distance_m = 1;
    unit.noise_var_w = 0.1;
    CHECK(snr_scale(unit, 1.0) == Approx(10).epsilon(1e-14));
    unit.atmosphere.k_alpha_per_m = 2 * std::log(2.0);
    unit.atmosphere.absorption_length_m = 1;
    unit.noise_var_w = 0.25;
    CHECK(snr_scale(unit, 1.0) == Approx(1).epsilon(1e-14));

    // Literal distance-free absorption reading
    sc.atmosphere.absorption_length_m = 1;
    CHECK(sc.absorption_length() == 1);
}

TEST_CASE("unit conversions")
{
    CHECK(db_to_linear(0) == 1);
    CHECK(db_to_linear(55) == Approx(std::pow(10.0, 5.5)).epsilon(1e-15));
    CHECK(dbm_to_watt(0) == Approx(1e-3).epsilon(1e-15));
}

TEST_CASE("snr_cdf: examples and shape")
{
    LseParams l;
    l.lambda = 1;
    l.tau = 0;
    CHECK(snr_cdf(0, l, 1) == 0);
    CHECK(snr_cdf(1, l, 1) == Approx(1 - std::exp(-1.0)).epsilon(1e-14));
    l.tau = 3;
    CHECK(snr_cdf(2.5, l, 2.5) == Approx(0.0189882).epsilon(1e-5));

    double prev = 0;
    for (double lam = 1e-6; lam < 1e6; lam *= 3)
    {
        double const f = snr_cdf(lam, l, 1);
        CHECK(f >= prev);
        prev = f;
    }
    CHECK(prev == Approx(1).epsilon(1e-12));
}

TEST_CASE("validation rejects bad hops")
{
    HopParams h = table_hop();
    h.pointing.s0 = 1.2;
    CHECK_THROWS_AS(h.validate(), ConfigError);
    h = table_hop();
    h.fading.alpha = -1;
    CHECK_THROWS_AS(h.validate(), ConfigError);
}
