// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "hubfp/conv_adder.hpp"
#include "hubfp/formats.hpp"
#include "hubfp/harness_types.hpp"
#include "hubfp/hub_adder.hpp"

namespace hubfp {

// Datapath words render MSB-first with a '·' radix marker after the
// integer bits and a '|' before the sticky position, e.g. "1·0101|1" for a
// 6-bit aligned word or "01·0101|1" for a raw sum with its carry bit.
std::string render_word(u128 bits, int total_width, int int_bits);

inline std::string render_word(const AlignedWord& w) {
  return render_word(w.bits, w.width, 1);
}

// Packed encoding as an uppercase hex literal, zero-padded to the format
// width: "0x3D".
std::string hex_bits(u64 bits, int total_bits);

// Compact JSON. Field names follow the trace/report records; stage words
// appear in the rendering above.
std::string to_json(const HubAddTrace& tr);
std::string to_json(const ConvAddTrace& tr);
std::string to_json(const VerifyReport& report);
std::string to_json(const ErrorStats& stats);
std::string to_json(const StructuralReport& report);

// One line per stage, for terminal output.
std::string render_trace_text(const HubAddTrace& tr);
std::string render_trace_text(const ConvAddTrace& tr);

}  // namespace hubfp
