// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/specfun/errors.hpp"

#include <cstdio>

namespace irsthz
{

namespace
{
std::string with_estimates(std::string const& what, double last, double prev)
{
    char buf[128];
    std::snprintf(buf, sizeof(buf), " (last=%.17g, previous=%.17g)", last,
                  prev);
    return what + buf;
}
}  // namespace

NumericError::NumericError(std::string const& what, double last,
                           double previous)
    : std::runtime_error(with_estimates(what, last, previous))
    , last_(last)
    , previous_(previous)
{
}

NumericError::NumericError(std::string const& what)
    : std::runtime_error(what)
{
}

}  // namespace irsthz
