// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace hubfp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Datapath word type. Widths go up to frac_bits + 5 (= 68 at the model
// limit f = 63), so 64 bits are not enough.
using u128 = unsigned __int128;

// Low n bits set, n in [0, 128].
constexpr u128 low_mask(int n) {
  if (n <= 0) return 0;
  if (n >= 128) return ~u128{0};
  return (u128{1} << n) - 1;
}

}  // namespace hubfp
