// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "hubfp/exact_value.hpp"
#include "hubfp/types.hpp"

namespace hubfp {

enum class ValueClass { Zero, Normal, Inf, NaN };

const char* to_string(ValueClass c);

// Parameterizes one floating-point family: e exponent-field bits and f
// stored fraction bits. Exponent bias is 2^(e-1) - 1; field value 0 is
// reserved for zero and the all-ones field for Inf/NaN, so the normal
// exponent range is emin() .. emax(). There are no subnormals in this
// model; underflow flushes to zero.
class FormatSpec {
 public:
  // Model limits: 2 <= exp_bits <= 15, 1 <= frac_bits <= 63.
  FormatSpec(int exp_bits, int frac_bits);

  int exp_bits() const { return exp_bits_; }
  int frac_bits() const { return frac_bits_; }
  int exp_bias() const { return (1 << (exp_bits_ - 1)) - 1; }
  int emin() const { return 1 - exp_bias(); }
  int emax() const { return (1 << exp_bits_) - 2 - exp_bias(); }
  int total_bits() const { return 1 + exp_bits_ + frac_bits_; }
  u32 exp_field_max() const { return (u32{1} << exp_bits_) - 1; }
  u64 frac_mask() const { return (u64{1} << frac_bits_) - 1; }

  static FormatSpec hub32() { return {8, 23}; }
  static FormatSpec hub64() { return {11, 52}; }

  bool operator==(const FormatSpec&) const = default;

 private:
  int exp_bits_;
  int frac_bits_;
};

// Packed HUB encoding: [sign | exp_field | frac_field]. The fraction holds
// the representative form of the significand; a Normal value decodes to
//
//   (-1)^sign * (1 + frac * 2^-f + 2^-(f+1)) * 2^(exp_field - bias)
//
// i.e. every HUB value sits half a ULP above the conventional point with
// the same fields. Encodings with exp_field == 0 are read as zero whatever
// the fraction says (inputs are taken denormals-are-zero style, so every
// bit pattern is meaningful); outputs are always canonical (fraction 0).
struct HubFloat {
  FormatSpec spec{2, 1};
  bool sign = false;
  u32 exp_field = 0;
  u64 frac_field = 0;

  ValueClass cls() const;
  int unbiased_exp() const { return static_cast<int>(exp_field) - spec.exp_bias(); }

  u64 bits() const;
  static HubFloat from_bits(const FormatSpec& spec, u64 bits);
  static HubFloat make(const FormatSpec& spec, bool sign, u32 exp_field,
                       u64 frac_field);

  static HubFloat zero(const FormatSpec& spec, bool sign = false);
  static HubFloat inf(const FormatSpec& spec, bool sign = false);
  static HubFloat quiet_nan(const FormatSpec& spec);

  bool operator==(const HubFloat&) const = default;  // structural (bit) equality
};

// Conventional encoding with the same layout; a Normal value decodes to
// (-1)^sign * (1 + frac * 2^-f) * 2^(exp_field - bias). Class rules and the
// zero reading match HubFloat so the two systems are layout-compatible.
struct ConvFloat {
  FormatSpec spec{2, 1};
  bool sign = false;
  u32 exp_field = 0;
  u64 frac_field = 0;

  ValueClass cls() const;
  int unbiased_exp() const { return static_cast<int>(exp_field) - spec.exp_bias(); }

  u64 bits() const;
  static ConvFloat from_bits(const FormatSpec& spec, u64 bits);
  static ConvFloat make(const FormatSpec& spec, bool sign, u32 exp_field,
                        u64 frac_field);

  static ConvFloat zero(const FormatSpec& spec, bool sign = false);
  static ConvFloat inf(const FormatSpec& spec, bool sign = false);
  static ConvFloat quiet_nan(const FormatSpec& spec);

  bool operator==(const ConvFloat&) const = default;
};

// Decoded value: exact real for Normal, class tag (plus sign) otherwise.
struct DecodedValue {
  ValueClass cls = ValueClass::Zero;
  bool sign = false;
  ExactValue value;  // meaningful for Normal; zero otherwise
};

DecodedValue decode_hub(const HubFloat& h);
DecodedValue decode_conv(const ConvFloat& c);

// Operational form of a Normal HUB significand: f+2 bits, a leading 1, the
// f stored bits, and the implicit trailing 1. Throws std::domain_error for
// non-Normal inputs.
u128 operational_significand(const HubFloat& h);

// Round an exact value into the HUB grid. Rounding to nearest is pure
// truncation of the normalized significand past bit f; the result is the
// nearest HUB value in the value's own binade and never further than half
// a ULP (2^(E'-f-1)) away. Overflow saturates to Inf, underflow flushes to
// a signed zero.
HubFloat round_exact_to_hub(const ExactValue& v, const FormatSpec& spec);
HubFloat round_exact_to_hub(const DecodedValue& v, const FormatSpec& spec);

// Round an exact value into the conventional grid with round-to-nearest,
// ties-to-even. Same overflow/flush policy as the HUB side.
ConvFloat round_exact_to_conv_rne(const ExactValue& v, const FormatSpec& spec);
ConvFloat round_exact_to_conv_rne(const DecodedValue& v, const FormatSpec& spec);

}  // namespace hubfp
