// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <bit>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace irsthz
{
//! 64-bit FNV-1a, used for checksums and content hashes
class Fnv1a
{
  public:
    void update(std::string_view bytes)
    {
        for (unsigned char c : bytes)
        {
            state_ ^= c;
            state_ *= 0x100000001b3ull;
        }
    }
    void update(double v)
    {
        auto const bits = std::bit_cast<std::uint64_t>(v);
        for (int i = 0; i < 8; ++i)
        {
            state_ ^= (bits >> (8 * i)) & 0xffu;
            state_ *= 0x100000001b3ull;
        }
    }
    std::uint64_t value() const { return state_; }
    std::string hex() const { return to_hex(state_); }

    static std::string to_hex(std::uint64_t v)
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(v));
        return buf;
    }

  private:
    std::uint64_t state_ = 0xcbf29ce484222325ull;
};

inline std::string fnv1a_hex(std::string_view bytes)
{
    Fnv1a h;
    h.update(bytes);
    return h.hex();
}

}  // namespace irsthz
