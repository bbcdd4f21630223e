// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <functional>

namespace irsthz
{

struct QuadOptions
{
    double abs_tol = 0;
    double rel_tol = 1e-10;
    int max_intervals = 2000;
};

struct QuadResult
{
    double value = 0;
    double abs_error = 0;
    int evaluations = 0;
    bool converged = false;
};

// Globally adaptive 7/15-point Gauss-Kronrod on a finite interval.
QuadResult integrate(std::function<double(double)> const& f, double a,
                     double b, QuadOptions const& opts = {});

// Integral over [a, inf) via the map x = a + t / (1 - t).
QuadResult integrate_to_infinity(std::function<double(double)> const& f,
                                 double a, QuadOptions const& opts = {});

}  // namespace irsthz
