// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "hubfp/formats.hpp"
#include "hubfp/hub_adder.hpp"  // AlignedWord, EffectiveOp
#include "hubfp/types.hpp"

namespace hubfp {

// Per-stage record of one conv_add call. Six stages over an f+4-bit word:
// integer bit, f fraction bits, guard, round and sticky. Unlike the HUB
// pipeline, stage 2 computes the sticky bit as a real OR of the discarded
// alignment bits, and stage 6 is a dedicated rounding stage whose
// increment can itself overflow.
struct ConvAddTrace {
  static constexpr int stage_count = 6;

  bool bypassed = false;

  struct Stage1 {
    bool swapped = false;
    int exp_diff = 0;
    EffectiveOp effective_op = EffectiveOp::add;
  } stage1;

  struct Stage2 {
    AlignedWord aligned_small;  // width f+4
    bool sticky = false;        // OR of the bits shifted out of the window
    bool complemented = false;
  } stage2;

  struct Stage3 {
    u128 raw_sum = 0;  // carry + f+4 bits
    int raw_width = 0;
    bool overflow = false;
    AlignedWord corrected;
    int result_exp = 0;
  } stage3;

  struct Stage4 {
    int lzc = 0;
  } stage4;

  struct Stage5 {
    u128 normalized = 0;  // f+4 bits
    int norm_width = 0;
    int final_exp = 0;
  } stage5;

  struct Stage6 {
    bool round_increment = false;
    bool post_round_overflow = false;
    ConvFloat result;
  } stage6;
};

// Significand of a Normal conventional value: 1.frac, f+1 bits.
// Throws std::domain_error for non-Normal inputs.
u128 conv_significand(const ConvFloat& c);

// The classic align / add / normalize / round pipeline with
// round-to-nearest-even. The result equals
// round_exact_to_conv_rne(exact sum) bit for bit.
std::pair<ConvFloat, ConvAddTrace> conv_add(const ConvFloat& x,
                                            const ConvFloat& y);

}  // namespace hubfp
