// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "hubfp/big_uint.hpp"
#include "hubfp/types.hpp"

namespace hubfp {

// Exact dyadic real: (-1)^negative * mantissa * 2^exp2.
//
// Canonical form: mantissa odd, or mantissa == 0 with exp2 == 0 and
// negative == false. Canonical values compare equal iff they represent the
// same real, so operator== is structural equality.
struct ExactValue {
  bool negative = false;
  BigUint mantissa;
  i64 exp2 = 0;

  static ExactValue zero() { return {}; }
  static ExactValue make(bool negative, BigUint mantissa, i64 exp2);
  static ExactValue pow2(bool negative, i64 e) {
    return make(negative, BigUint(1), e);
  }

  bool is_zero() const { return mantissa.is_zero(); }
  bool is_canonical() const;
  ExactValue negated() const;
  ExactValue abs() const;

  // Floor of log2(|v|): |v| = m * 2^msb_exp() with m in [1, 2). Pre: nonzero.
  i64 msb_exp() const {
    return static_cast<i64>(mantissa.bit_length()) - 1 + exp2;
  }

  double to_double() const;
  std::string to_decimal() const;  // exact finite decimal expansion

  bool operator==(const ExactValue&) const = default;
};

// Three-way value comparisons (-1, 0, +1).
int compare_abs(const ExactValue& a, const ExactValue& b);
int compare(const ExactValue& a, const ExactValue& b);

}  // namespace hubfp
