// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

namespace irsthz
{
inline constexpr char const version_string[] = "0.1.0";
}  // namespace irsthz
