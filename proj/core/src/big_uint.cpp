// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hubfp/big_uint.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace hubfp {

namespace {
constexpr std::size_t kLimbBits = 64;
}

BigUint::BigUint(u64 v) {
  if (v != 0) limbs_.push_back(v);
}

BigUint BigUint::from_u128(u128 v) {
  BigUint r;
  if (v != 0) {
    r.limbs_.push_back(static_cast<u64>(v));
    u64 hi = static_cast<u64>(v >> 64);
    if (hi != 0) r.limbs_.push_back(hi);
  }
  return r;
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  return (limbs_.size() - 1) * kLimbBits +
         (kLimbBits - std::countl_zero(limbs_.back()));
}

bool BigUint::bit(std::size_t i) const {
  std::size_t limb = i / kLimbBits;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % kLimbBits)) & 1;
}

std::size_t BigUint::trailing_zeros() const {
  assert(!is_zero());
  std::size_t i = 0;
  while (limbs_[i] == 0) ++i;
  return i * kLimbBits + std::countr_zero(limbs_[i]);
}

bool BigUint::any_bits_below(std::size_t n) const {
  if (n == 0 || is_zero()) return false;
  std::size_t full = n / kLimbBits;
  for (std::size_t i = 0; i < full && i < limbs_.size(); ++i)
    if (limbs_[i] != 0) return true;
  std::size_t rem = n % kLimbBits;
  if (rem != 0 && full < limbs_.size())
    if ((limbs_[full] & ((u64{1} << rem) - 1)) != 0) return true;
  return false;
}

u64 BigUint::to_u64() const {
  assert(bit_length() <= 64);
  return limbs_.empty() ? 0 : limbs_[0];
}

u128 BigUint::to_u128() const {
  assert(bit_length() <= 128);
  u128 v = 0;
  if (limbs_.size() > 1) v = u128{limbs_[1]} << 64;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

double BigUint::to_double() const {
  if (is_zero()) return 0.0;
  std::size_t len = bit_length();
  if (len <= 64) return static_cast<double>(to_u64());
  // Top 64 bits are enough for a double; the rest is below its precision.
  BigUint top = *this >> (len - 64);
  return std::ldexp(static_cast<double>(top.to_u64()),
                    static_cast<int>(len - 64));
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  BigUint tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    u32 rem = tmp.divmod_u32(1000000000u);
    for (int i = 0; i < 9; ++i) {
      out.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  std::reverse(out.begin(), out.end());
  return out;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  u128 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<u64>(sum);
    carry = sum >> 64;
    if (carry == 0 && i >= rhs.limbs_.size()) break;
  }
  if (carry != 0) limbs_.push_back(static_cast<u64>(carry));
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  assert(*this >= rhs);
  u64 borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 sub = u128{borrow};
    if (i < rhs.limbs_.size()) sub += rhs.limbs_[i];
    u128 cur = limbs_[i];
    if (cur >= sub) {
      limbs_[i] = static_cast<u64>(cur - sub);
      borrow = 0;
    } else {
      limbs_[i] = static_cast<u64>((u128{1} << 64) + cur - sub);
      borrow = 1;
    }
    if (borrow == 0 && i >= rhs.limbs_.size()) break;
  }
  trim();
  return *this;
}

BigUint& BigUint::operator<<=(std::size_t n) {
  if (is_zero() || n == 0) return *this;
  std::size_t limb_shift = n / kLimbBits;
  std::size_t bit_shift = n % kLimbBits;
  std::size_t old_size = limbs_.size();
  limbs_.resize(old_size + limb_shift + 1, 0);
  for (std::size_t i = old_size; i-- > 0;) {
    u64 v = limbs_[i];
    limbs_[i] = 0;
    if (bit_shift == 0) {
      limbs_[i + limb_shift] |= v;
    } else {
      limbs_[i + limb_shift + 1] |= v >> (kLimbBits - bit_shift);
      limbs_[i + limb_shift] |= v << bit_shift;
    }
  }
  trim();
  return *this;
}

BigUint& BigUint::operator>>=(std::size_t n) {
  if (is_zero() || n == 0) return *this;
  std::size_t limb_shift = n / kLimbBits;
  std::size_t bit_shift = n % kLimbBits;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(),
               limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
  if (bit_shift != 0) {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      limbs_[i] >>= bit_shift;
      if (i + 1 < limbs_.size())
        limbs_[i] |= limbs_[i + 1] << (kLimbBits - bit_shift);
    }
  }
  trim();
  return *this;
}

BigUint& BigUint::mul_u64(u64 m) {
  if (m == 0 || is_zero()) {
    limbs_.clear();
    return *this;
  }
  u128 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 prod = u128{limbs_[i]} * m + carry;
    limbs_[i] = static_cast<u64>(prod);
    carry = prod >> 64;
  }
  if (carry != 0) limbs_.push_back(static_cast<u64>(carry));
  return *this;
}

u32 BigUint::divmod_u32(u32 d) {
  if (d == 0) throw std::invalid_argument("BigUint: division by zero");
  u64 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    // Split the limb in 32-bit halves so the dividend fits in 64 bits.
    u64 hi = (rem << 32) | (limbs_[i] >> 32);
    u64 qhi = hi / d;
    rem = hi % d;
    u64 lo = (rem << 32) | (limbs_[i] & 0xFFFFFFFFull);
    u64 qlo = lo / d;
    rem = lo % d;
    limbs_[i] = (qhi << 32) | qlo;
  }
  trim();
  return static_cast<u32>(rem);
}

BigUint BigUint::operator*(const BigUint& rhs) const {
  BigUint out;
  if (is_zero() || rhs.is_zero()) return out;
  out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      u128 cur = u128{limbs_[i]} * rhs.limbs_[j] + out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<u64>(cur);
      carry = cur >> 64;
    }
    out.limbs_[i + rhs.limbs_.size()] += static_cast<u64>(carry);
  }
  out.trim();
  return out;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace hubfp
