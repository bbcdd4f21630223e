// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

namespace irsthz
{

// Kummer confluent function 1F1(a; b; x) for b > 0.
// Negative arguments go through Kummer's transformation to avoid cancellation.
double hyp1f1(double a, double b, double x);

// Gauss function 2F1(a, b; c; x) for 0 <= x < 1 and c > 0.
double hyp2f1(double a, double b, double c, double x);

}  // namespace irsthz
