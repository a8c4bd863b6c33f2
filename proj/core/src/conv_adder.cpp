// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hubfp/conv_adder.hpp"

#include <stdexcept>

namespace hubfp {

u128 conv_significand(const ConvFloat& c) {
  if (c.cls() != ValueClass::Normal)
    throw std::domain_error(std::string("conv_significand: ") +
                            to_string(c.cls()) + " has no significand");
  return (u128{1} << c.spec.frac_bits()) | c.frac_field;
}

namespace {

bool bypass(const ConvFloat& x, const ConvFloat& y, ConvFloat& out) {
  ValueClass cx = x.cls(), cy = y.cls();
  if (cx == ValueClass::Normal && cy == ValueClass::Normal) return false;
  if (cx == ValueClass::NaN || cy == ValueClass::NaN) {
    out = ConvFloat::quiet_nan(x.spec);
  } else if (cx == ValueClass::Inf && cy == ValueClass::Inf) {
    out = x.sign == y.sign ? ConvFloat::inf(x.spec, x.sign)
                           : ConvFloat::quiet_nan(x.spec);
  } else if (cx == ValueClass::Inf) {
    out = ConvFloat::inf(x.spec, x.sign);
  } else if (cy == ValueClass::Inf) {
    out = ConvFloat::inf(y.spec, y.sign);
  } else if (cx == ValueClass::Zero && cy == ValueClass::Zero) {
    out = ConvFloat::zero(x.spec, x.sign && y.sign);
  } else if (cx == ValueClass::Zero) {
    out = y;
  } else {
    out = x;
  }
  return true;
}

}  // namespace

std::pair<ConvFloat, ConvAddTrace> conv_add(const ConvFloat& x,
                                            const ConvFloat& y) {
  if (x.spec != y.spec)
    throw std::invalid_argument("conv_add: operand specs differ");
  ConvAddTrace tr;
  ConvFloat out;
  if (bypass(x, y, out)) {
    tr.bypassed = true;
    tr.stage6.result = out;
    return {out, tr};
  }
  int f = x.spec.frac_bits();
  int width = f + 4;  // 1 . f | guard round sticky
  u128 mask = low_mask(width);

  // Stage 1: order by magnitude, fields compare lexicographically.
  bool swapped = (y.exp_field > x.exp_field) ||
                 (y.exp_field == x.exp_field && y.frac_field > x.frac_field);
  const ConvFloat& large = swapped ? y : x;
  const ConvFloat& small = swapped ? x : y;
  int d = static_cast<int>(large.exp_field) -
          static_cast<int>(small.exp_field);
  EffectiveOp op = x.sign == y.sign ? EffectiveOp::add : EffectiveOp::sub;
  tr.stage1 = {swapped, d, op};

  // Stage 2: shift right by d; the sticky position absorbs the OR of every
  // bit shifted out of the window.
  u128 small_full = conv_significand(small) << 3;
  u128 lost = d >= width ? small_full : (small_full & low_mask(d));
  u128 aligned = d >= width ? 0 : small_full >> d;
  bool sticky = lost != 0;
  if (sticky) aligned |= 1;
  AlignedWord small_word{aligned, width, false};
  if (op == EffectiveOp::sub) {
    small_word.bits = (~aligned + 1) & mask;
    small_word.negative_flag = true;
  }
  tr.stage2 = {small_word, sticky, op == EffectiveOp::sub};

  // Stage 3: add; on carry-out shift right once, jamming the dropped bit
  // into the sticky position (it still matters to the rounding decision).
  u128 large_word = conv_significand(large) << 3;
  int result_exp = large.unbiased_exp();
  u128 raw;
  bool overflow = false;
  u128 sum;
  if (op == EffectiveOp::sub) {
    raw = large_word + small_word.bits;
    sum = raw & mask;
  } else {
    raw = large_word + small_word.bits;
    if ((raw >> width) != 0) {
      overflow = true;
      sum = ((raw >> 1) | (raw & 1)) & mask;
      result_exp += 1;
    } else {
      sum = raw;
    }
  }
  tr.stage3 = {raw, width + 1, overflow, AlignedWord{sum, width, false},
               result_exp};

  // Stage 4: leading-zero count (sentinel = width on cancellation).
  int lzc = width;
  if (sum != 0) {
    lzc = 0;
    while (((sum >> (width - 1 - lzc)) & 1) == 0) ++lzc;
  }
  tr.stage4 = {lzc};

  // Stage 5: normalize.
  if (lzc >= width) {
    out = ConvFloat::zero(x.spec);  // exact cancellation
    tr.stage5 = {0, width, 0};
    tr.stage6.result = out;
    return {out, tr};
  }
  u128 normalized = (sum << lzc) & mask;
  int final_exp = result_exp - lzc;
  tr.stage5 = {normalized, width, final_exp};

  // Stage 6: round to nearest even on the normalized word, then range-check.
  u64 kept = static_cast<u64>(normalized >> 3);  // 1 + f bits
  bool round_bit = ((normalized >> 2) & 1) != 0;
  bool below = (normalized & 3) != 0;
  bool increment = round_bit && (below || (kept & 1));
  bool post_overflow = false;
  if (increment) {
    ++kept;
    if (kept == (u64{1} << (f + 1))) {
      post_overflow = true;
      kept >>= 1;
      final_exp += 1;
    }
  }
  bool sign = large.sign;
  if (final_exp > x.spec.emax()) {
    out = ConvFloat::inf(x.spec, sign);
  } else if (final_exp < x.spec.emin()) {
    out = ConvFloat::zero(x.spec, sign);
  } else {
    out = ConvFloat::make(x.spec, sign,
                          static_cast<u32>(final_exp + x.spec.exp_bias()),
                          kept & x.spec.frac_mask());
  }
  tr.stage6 = {increment, post_overflow, out};
  return {out, tr};
}

}  // namespace hubfp
