// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hubfp/hub_adder.hpp"

#include <stdexcept>

namespace hubfp {

const char* to_string(EffectiveOp op) {
  return op == EffectiveOp::add ? "add" : "sub";
}

StageOneResult stage1_compare(const HubFloat& x, const HubFloat& y) {
  if (x.spec != y.spec)
    throw std::invalid_argument("stage1_compare: operand specs differ");
  StageOneResult r;
  r.swapped = (y.exp_field > x.exp_field) ||
              (y.exp_field == x.exp_field && y.frac_field > x.frac_field);
  r.large = r.swapped ? y : x;
  r.small = r.swapped ? x : y;
  r.exp_diff = static_cast<int>(r.large.exp_field) -
               static_cast<int>(r.small.exp_field);
  r.effective_op = x.sign == y.sign ? EffectiveOp::add : EffectiveOp::sub;
  return r;
}

AlignedWord stage2_align(u128 small_operational, int frac_bits, int exp_diff,
                         EffectiveOp op) {
  if (exp_diff < 0)
    throw std::invalid_argument("stage2_align: negative exponent difference");
  int width = frac_bits + 3;
  u128 word = small_operational << 1;  // sticky position starts at 0
  word = exp_diff >= width ? 0 : word >> exp_diff;
  if (exp_diff >= 2) word |= 1;  // discarded tail always holds the ILSB
  AlignedWord out;
  out.width = width;
  out.bits = word;
  if (op == EffectiveOp::sub) {
    out.bits = (~word + 1) & low_mask(width);
    out.negative_flag = true;
  }
  return out;
}

StageThreeResult stage3_add(const AlignedWord& large_word,
                            const AlignedWord& small_word, int exp_large) {
  int width = large_word.width;
  u128 mask = low_mask(width);
  StageThreeResult r;
  r.raw_width = width + 1;
  r.result_exp = exp_large;
  r.sum.width = width;
  if (small_word.negative_flag) {
    // Modular magnitude subtraction; the raw record keeps the end-around
    // carry, the corrected word drops it.
    r.raw_sum = large_word.bits + small_word.bits;
    r.sum.bits = r.raw_sum & mask;
    return r;
  }
  r.raw_sum = large_word.bits + small_word.bits;
  if ((r.raw_sum >> width) != 0) {
    r.overflow = true;
    // The dropped bit sits below the truncation point; no sticky needed.
    r.sum.bits = (r.raw_sum >> 1) & mask;
    r.result_exp = exp_large + 1;
  } else {
    r.sum.bits = r.raw_sum;
  }
  return r;
}

int stage4_lzc(const AlignedWord& sum) {
  if (sum.bits == 0) return sum.width;  // cancellation sentinel
  int lzc = 0;
  while (((sum.bits >> (sum.width - 1 - lzc)) & 1) == 0) ++lzc;
  return lzc;
}

HubFloat stage5_normalize_truncate(const AlignedWord& sum, int result_exp,
                                   int lzc, bool sign,
                                   const FormatSpec& spec) {
  if (lzc >= sum.width) return HubFloat::zero(spec);  // exact cancellation
  int final_exp = result_exp - lzc;
  if (final_exp > spec.emax()) return HubFloat::inf(spec, sign);
  if (final_exp < spec.emin()) return HubFloat::zero(spec, sign);
  u128 normalized = (sum.bits << lzc) & low_mask(sum.width);
  u64 frac = static_cast<u64>(normalized >> 2) & spec.frac_mask();
  return HubFloat::make(spec, sign,
                        static_cast<u32>(final_exp + spec.exp_bias()), frac);
}

namespace {

// Same special-value algebra as the reference adder.
bool bypass(const HubFloat& x, const HubFloat& y, HubFloat& out) {
  ValueClass cx = x.cls(), cy = y.cls();
  if (cx == ValueClass::Normal && cy == ValueClass::Normal) return false;
  if (cx == ValueClass::NaN || cy == ValueClass::NaN) {
    out = HubFloat::quiet_nan(x.spec);
  } else if (cx == ValueClass::Inf && cy == ValueClass::Inf) {
    out = x.sign == y.sign ? HubFloat::inf(x.spec, x.sign)
                           : HubFloat::quiet_nan(x.spec);
  } else if (cx == ValueClass::Inf) {
    out = HubFloat::inf(x.spec, x.sign);
  } else if (cy == ValueClass::Inf) {
    out = HubFloat::inf(y.spec, y.sign);
  } else if (cx == ValueClass::Zero && cy == ValueClass::Zero) {
    out = HubFloat::zero(x.spec, x.sign && y.sign);
  } else if (cx == ValueClass::Zero) {
    out = y;
  } else {
    out = x;
  }
  return true;
}

}  // namespace

std::pair<HubFloat, HubAddTrace> hub_add(const HubFloat& x,
                                         const HubFloat& y) {
  if (x.spec != y.spec)
    throw std::invalid_argument("hub_add: operand specs differ");
  HubAddTrace tr;
  HubFloat out;
  if (bypass(x, y, out)) {
    tr.bypassed = true;
    tr.stage5.result = out;
    return {out, tr};
  }
  int f = x.spec.frac_bits();

  StageOneResult s1 = stage1_compare(x, y);
  tr.stage1 = {s1.swapped, s1.exp_diff, s1.effective_op};

  AlignedWord small_word = stage2_align(operational_significand(s1.small), f,
                                        s1.exp_diff, s1.effective_op);
  // Two's complement preserves the lowest bit, so bit 0 reads the sticky
  // position whether or not the word was complemented.
  tr.stage2 = {small_word, (small_word.bits & 1) != 0,
               s1.effective_op == EffectiveOp::sub};

  AlignedWord large_word{operational_significand(s1.large) << 1, f + 3,
                         false};
  StageThreeResult s3 =
      stage3_add(large_word, small_word, s1.large.unbiased_exp());
  tr.stage3 = {s3.raw_sum, s3.raw_width, s3.overflow, s3.sum, s3.result_exp};

  int lzc = stage4_lzc(s3.sum);
  tr.stage4 = {lzc};

  out = stage5_normalize_truncate(s3.sum, s3.result_exp, lzc, s1.large.sign,
                                  x.spec);
  tr.stage5.norm_width = f + 3;
  if (lzc < s3.sum.width) {
    tr.stage5.normalized = (s3.sum.bits << lzc) & low_mask(f + 3);
    tr.stage5.final_exp = s3.result_exp - lzc;
  }
  tr.stage5.result = out;
  return {out, tr};
}

}  // namespace hubfp
