// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include "irsthz/specfun/errors.hpp"
#include "irsthz/specfun/fox_h.hpp"

using namespace irsthz;
using doctest::Approx;

TEST_CASE("fox_h: incomplete gamma instance")
{
    // G^{2,0}_{1,2}[x | 1; tau+1, 0] = Gamma(tau+1, x)
    auto spec = FoxHSpec::meijer_g(2, 0, {1.0}, {1.0, 0.0});
    CHECK(fox_h_univariate(spec, 1.0) == Approx(std::exp(-1.0)).epsilon(1e-10));

    for (double a : {1.0, 2.7, 5.0})
    {
        for (double x : {0.1, 1.0, 10.0})
        {
            CAPTURE(a);
            CAPTURE(x);
            auto s = FoxHSpec::meijer_g(2, 0, {1.0}, {a, 0.0});
            CHECK(fox_h_univariate(s, x)
                  == Approx(boost::math::tgamma(a, x)).epsilon(1e-8));
        }
    }
}

TEST_CASE("fox_h: elementary Meijer-G reduction")
{
    // G^{1,1}_{1,1}[l | 0; 0] = 1 / (1 + l)
    auto spec = FoxHSpec::meijer_g(1, 1, {0.0}, {0.0});
    CHECK(fox_h_univariate(spec, 1.0) == Approx(0.5).epsilon(1e-11));
    CHECK(fox_h_univariate(spec, 0.02) == Approx(1 / 1.02).epsilon(1e-11));
    CHECK(fox_h_univariate(spec, 37.0) == Approx(1 / 38.0).epsilon(1e-11));
}

TEST_CASE("fox_h: non-unit scale")
{
    // H^{1,0}_{0,1}[z | (0, 1/2)] = 2 exp(-z^2)
    FoxHSpec spec(1, 0, {}, {{0.0, 0.5}});
    for (double z : {0.3, 1.0, 2.2})
    {
        CAPTURE(z);
        CHECK(fox_h_univariate(spec, z)
              == Approx(2 * std::exp(-z * z)).epsilon(1e-10));
    }
}

TEST_CASE("fox_h: doubling nodes is self-consistent")
{
    FoxHSpec spec(2, 1, {{-0.3, 0.5}, {1.0, 1.0}}, {{3.2, 1.0}, {0.0, 1.0}});
    ContourConfig a;
    ContourConfig b;
    b.nodes = 2 * a.nodes;
    double const va = fox_h_univariate(spec, 0.7, a);
    double const vb = fox_h_univariate(spec, 0.7, b);
    CHECK(std::abs(va / vb - 1) < a.target_rel_tol);
}

TEST_CASE("fox_h: explicit contour offsets agree")
{
    auto spec = FoxHSpec::meijer_g(2, 0, {1.0}, {2.7, 0.0});
    ContourConfig c1;
    c1.offset = 0.5;
    ContourConfig c2;
    c2.offset = 3.0;
    CHECK(fox_h_univariate(spec, 1.0, c1)
          == Approx(fox_h_univariate(spec, 1.0, c2)).epsilon(1e-10));
}

TEST_CASE("fox_h: inadmissible instances are rejected")
{
    // Gamma(s) poles at s <= 0 meet Gamma(-1 - s) poles at s >= -1
    CHECK_THROWS_AS(FoxHSpec::meijer_g(1, 1, {2.0}, {0.0}), ConfigError);
    // Kernel without vertical decay
    CHECK_THROWS_AS(FoxHSpec(1, 0, {{0.0, 1.0}}, {{0.0, 1.0}}), ConfigError);
    auto spec = FoxHSpec::meijer_g(1, 1, {0.0}, {0.0});
    ContourConfig bad;
    bad.offset = 2.0;
    CHECK_THROWS_AS(fox_h_univariate(spec, 1.0, bad), DomainError);
    CHECK_THROWS_AS(fox_h_univariate(spec, -1.0), DomainError);
}

TEST_CASE("fox_h: strip and decay")
{
    auto spec = FoxHSpec::meijer_g(1, 1, {0.0}, {0.0});
    CHECK(spec.strip().lo == 0);
    CHECK(spec.strip().hi == 1);
    CHECK(spec.decay() == 2);
}

TEST_CASE("fox_h_bivariate: separable kernel is a product")
{
    auto first = FoxHSpec::meijer_g(2, 0, {1.0}, {1.0, 0.0});
    auto second = FoxHSpec::meijer_g(1, 1, {0.0}, {0.0});
    BivariateFoxHSpec spec(0, {}, {}, first, second);
    auto r = fox_h_bivariate(spec, 0.8, 2.0);
    CHECK(r.value == Approx(std::exp(-0.8) / 3.0).epsilon(1e-9));
    CHECK(r.imag_residue < 1e-8);
}

TEST_CASE("fox_h_bivariate: joint factor 1 / (1 - r - s)")
{
    // Gamma(1 - r - s) / Gamma(2 - r - s) = int_0^1 t^{-r-s} dt, and with
    // K1 = Gamma(r), K2 = Gamma(s) each inner contour gives exp(-z t), so
    // H = int_0^1 exp(-(z1 + z2) t) dt.
    auto first = FoxHSpec(1, 0, {}, {{0.0, 1.0}});
    auto second = FoxHSpec(1, 0, {}, {{0.0, 1.0}});
    BivariateFoxHSpec spec(1, {{0.0, 1.0, 1.0}}, {{-1.0, 1.0, 1.0}}, first,
                           second);
    double const z1 = 0.4;
    double const z2 = 0.7;
    double const zs = z1 + z2;
    auto r = fox_h_bivariate(spec, z1, z2);
    CHECK(r.value == Approx(-std::expm1(-zs) / zs).epsilon(1e-8));
}
