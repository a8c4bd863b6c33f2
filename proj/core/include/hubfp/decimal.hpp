// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "hubfp/big_uint.hpp"
#include "hubfp/formats.hpp"

namespace hubfp {

// A parsed decimal literal: (-1)^negative * digits / 10^pow10. Kept exact
// so encodings derived from it match the exact-arithmetic oracle bit for
// bit; no native float ever touches the value.
struct DecimalNumber {
  bool negative = false;
  BigUint digits;
  int pow10 = 0;
};

// Accepts [+-]ddd[.ddd][e[+-]ddd]. Throws std::invalid_argument naming the
// offending text. Decimal exponents are limited to +-9999.
DecimalNumber parse_decimal(std::string_view text);

// Round the exact decimal value into each grid, entirely in integer
// arithmetic: scale to f+2 significand bits plus an exact sticky flag,
// then truncate (HUB) or round to nearest even (conventional).
HubFloat decimal_to_hub(const DecimalNumber& d, const FormatSpec& spec);
ConvFloat decimal_to_conv_rne(const DecimalNumber& d, const FormatSpec& spec);

}  // namespace hubfp
