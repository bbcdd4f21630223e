// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <array>
#include <cstdint>

namespace irsthz
{
/*!
 * Philox4x32-10 counter-based generator.
 *
 * The 64-bit seed forms the key and the stream index occupies the upper half
 * of the counter, so (seed, stream) pairs give independent, reproducible
 * sequences without any shared state.
 */
class Philox4x32
{
  public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    Philox4x32(std::uint64_t seed, std::uint64_t stream);

    //! Raw bijection used by the stream (exposed for known-answer tests)
    static Block encrypt(Block counter, Key key);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    //! Uniform on the open interval (0, 1) with 53 random bits
    double uniform();

  private:
    Key key_;
    Block counter_;
    Block buffer_{};
    int used_ = 4;
};

}  // namespace irsthz
