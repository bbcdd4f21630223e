// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <stdexcept>
#include <string>

namespace irsthz
{

//! Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Iteration or quadrature that failed to reach its tolerance.
class NumericError : public std::runtime_error
{
  public:
    NumericError(std::string const& what, double last, double previous);
    explicit NumericError(std::string const& what);

    double last_estimate() const { return last_; }
    double previous_estimate() const { return previous_; }

  private:
    double last_{0};
    double previous_{0};
};

//! Invalid user configuration (files, flags, parameter structs).
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//! Channel parameters that collapse the statistical model.
class DegenerateChannelError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! File access failure (missing, unreadable or unwritable path)
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Throw ConfigError unless the predicate holds
inline void require(bool ok, std::string const& msg)
{
    if (!ok)
        throw ConfigError(msg);
}

}  // namespace irsthz
