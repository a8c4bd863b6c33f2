// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "hubfp/formats.hpp"
#include "hubfp/types.hpp"

namespace hubfp {

enum class EffectiveOp { add, sub };

const char* to_string(EffectiveOp op);

// One aligned significand word. Width f+3: the integer bit, f+1 fraction
// bits, and the sticky position at weight 2^-(f+2) — one bit narrower than
// the conventional adder's f+4-bit word. negative_flag marks a word holding
// a two's-complemented subtrahend.
struct AlignedWord {
  u128 bits = 0;
  int width = 0;
  bool negative_flag = false;

  bool operator==(const AlignedWord&) const = default;
};

// Per-stage record of one hub_add call. Exactly five stages; there is no
// rounding-stage record because the normalized word is already the rounded
// result (truncation past bit f is round-to-nearest in the HUB grid).
struct HubAddTrace {
  static constexpr int stage_count = 5;

  bool bypassed = false;  // special-value operands skip the pipeline

  struct Stage1 {
    bool swapped = false;
    int exp_diff = 0;
    EffectiveOp effective_op = EffectiveOp::add;
  } stage1;

  struct Stage2 {
    AlignedWord aligned_small;
    bool sticky = false;
    bool complemented = false;
  } stage2;

  struct Stage3 {
    u128 raw_sum = 0;  // carry + f+3 bits
    int raw_width = 0;
    bool overflow = false;
    AlignedWord corrected;
    int result_exp = 0;
  } stage3;

  struct Stage4 {
    int lzc = 0;
  } stage4;

  struct Stage5 {
    u128 normalized = 0;  // f+3 bits
    int norm_width = 0;
    int final_exp = 0;
    HubFloat result;
  } stage5;
};

// Stage 1: identify the smaller operand and the exponent difference.
// Magnitude order is (exp_field, frac_field) lexicographic; ties keep x
// first. The effective operation is sub iff the signs differ.
struct StageOneResult {
  HubFloat large;
  HubFloat small;
  int exp_diff = 0;
  EffectiveOp effective_op = EffectiveOp::add;
  bool swapped = false;
};
StageOneResult stage1_compare(const HubFloat& x, const HubFloat& y);

// Stage 2: align the smaller operational significand by d places inside the
// f+3-bit window. The sticky position gets the genuine shifted-in bit when
// d == 1 (that bit is the implicit LSB, so nothing is lost) and the
// constant 1 when d >= 2 — every discarded tail contains the implicit LSB,
// so its OR is known to be 1 without computing it. For an effective
// subtraction the whole word is then two's-complemented.
AlignedWord stage2_align(u128 small_operational, int frac_bits, int exp_diff,
                         EffectiveOp op);

// Stage 3: add the aligned words and correct a carry-out by one right
// shift (the bit dropped below the window lies under the truncation point)
// plus an exponent increment. Subtraction is a modular add of the
// complemented word; the end-around carry is discarded since stage 1
// guarantees a non-negative magnitude.
struct StageThreeResult {
  AlignedWord sum;
  int result_exp = 0;
  bool overflow = false;
  u128 raw_sum = 0;
  int raw_width = 0;
};
StageThreeResult stage3_add(const AlignedWord& large_word,
                            const AlignedWord& small_word, int exp_large);

// Stage 4: leading-zero count of the magnitude, scanning from the integer
// bit. An all-zero word returns the sentinel width f+3 (exact cancellation).
int stage4_lzc(const AlignedWord& sum);

// Stage 5: normalize by the leading-zero count and truncate: the f bits
// after the leading 1 become the fraction, everything below is dropped.
// Overflow saturates to Inf, underflow flushes to zero, the cancellation
// sentinel yields +0.
HubFloat stage5_normalize_truncate(const AlignedWord& sum, int result_exp,
                                   int lzc, bool sign,
                                   const FormatSpec& spec);

// The full five-stage adder. Special-value operands bypass the pipeline
// (trace marked bypassed); otherwise stages 1-5 run and the result equals
// reference_hub_add bit for bit.
std::pair<HubFloat, HubAddTrace> hub_add(const HubFloat& x,
                                         const HubFloat& y);

}  // namespace hubfp
