// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hubfp/types.hpp"

namespace hubfp {

// Arbitrary-precision unsigned integer. Only the handful of operations the
// exact-arithmetic layer needs: add, subtract (a >= b), shifts, compare,
// small multiply/divide, and schoolbook multiply. Limbs are 64-bit,
// little-endian, with no high zero limb (so equal values compare equal
// structurally).
class BigUint {
 public:
  BigUint() = default;
  BigUint(u64 v);  // NOLINT(google-explicit-constructor)
  static BigUint from_u128(u128 v);

  bool is_zero() const { return limbs_.empty(); }
  std::size_t bit_length() const;  // 0 for zero
  bool bit(std::size_t i) const;
  std::size_t trailing_zeros() const;  // pre: !is_zero()
  bool any_bits_below(std::size_t n) const;

  u64 to_u64() const;    // pre: bit_length() <= 64
  u128 to_u128() const;  // pre: bit_length() <= 128
  double to_double() const;
  std::string to_decimal() const;

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator-=(const BigUint& rhs);  // pre: *this >= rhs
  BigUint& operator<<=(std::size_t n);
  BigUint& operator>>=(std::size_t n);
  BigUint& mul_u64(u64 m);
  u32 divmod_u32(u32 d);  // in-place quotient, returns remainder; pre: d != 0

  BigUint operator*(const BigUint& rhs) const;

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator<<(BigUint a, std::size_t n) { return a <<= n; }
  friend BigUint operator>>(BigUint a, std::size_t n) { return a >>= n; }

  std::strong_ordering operator<=>(const BigUint& rhs) const;
  bool operator==(const BigUint& rhs) const = default;

 private:
  void trim();

  std::vector<u64> limbs_;
};

}  // namespace hubfp
