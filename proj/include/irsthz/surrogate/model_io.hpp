// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <string>
#include <vector>

#include "irsthz/surrogate/mlp.hpp"

namespace irsthz
{
inline constexpr int model_format_major = 1;
inline constexpr int model_format_minor = 0;

class ModelFormatError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/*!
 * Text model format.
 *
 * Every floating-point value is written as the 16 hex digits of its IEEE-754
 * bit pattern, so a round trip is exact. The final line carries an FNV-1a
 * checksum of all preceding bytes. A newer minor version loads with a
 * warning; a different major version is rejected.
 */
std::string serialize_model(MlpModel const& model);
MlpModel deserialize_model(std::string const& text,
                           std::vector<std::string>* warnings = nullptr);

void save_model(MlpModel const& model, std::string const& path);
MlpModel load_model(std::string const& path,
                    std::vector<std::string>* warnings = nullptr);

}  // namespace irsthz
