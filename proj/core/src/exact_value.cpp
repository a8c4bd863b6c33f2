// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hubfp/exact_value.hpp"

#include <cmath>
#include <utility>

namespace hubfp {

ExactValue ExactValue::make(bool negative, BigUint mantissa, i64 exp2) {
  ExactValue v;
  if (mantissa.is_zero()) return v;
  std::size_t tz = mantissa.trailing_zeros();
  if (tz != 0) {
    mantissa >>= tz;
    exp2 += static_cast<i64>(tz);
  }
  v.negative = negative;
  v.mantissa = std::move(mantissa);
  v.exp2 = exp2;
  return v;
}

bool ExactValue::is_canonical() const {
  if (mantissa.is_zero()) return exp2 == 0 && !negative;
  return mantissa.bit(0);
}

ExactValue ExactValue::negated() const {
  if (is_zero()) return zero();
  ExactValue v = *this;
  v.negative = !v.negative;
  return v;
}

ExactValue ExactValue::abs() const {
  ExactValue v = *this;
  v.negative = false;
  return v;
}

double ExactValue::to_double() const {
  if (is_zero()) return 0.0;
  double m = mantissa.to_double();
  double v = m * std::ldexp(1.0, static_cast<int>(exp2));
  return negative ? -v : v;
}

std::string ExactValue::to_decimal() const {
  if (is_zero()) return "0";
  std::string out = negative ? "-" : "";
  if (exp2 >= 0) {
    out += (mantissa << static_cast<std::size_t>(exp2)).to_decimal();
    return out;
  }
  std::size_t k = static_cast<std::size_t>(-exp2);
  BigUint int_part = mantissa >> k;
  out += int_part.to_decimal();
  // Fractional part: frac / 2^k has exactly k decimal digits (frac * 5^k,
  // zero-padded on the left).
  BigUint frac = mantissa - (int_part << k);
  if (frac.is_zero()) return out;
  for (std::size_t i = 0; i < k; ++i) frac.mul_u64(5);
  std::string digits = frac.to_decimal();
  std::string padded(k - digits.size(), '0');
  padded += digits;
  while (!padded.empty() && padded.back() == '0') padded.pop_back();
  out += '.';
  out += padded;
  return out;
}

int compare_abs(const ExactValue& a, const ExactValue& b) {
  if (a.is_zero() && b.is_zero()) return 0;
  if (a.is_zero()) return -1;
  if (b.is_zero()) return 1;
  i64 ma = a.msb_exp(), mb = b.msb_exp();
  if (ma != mb) return ma < mb ? -1 : 1;
  // Same leading-bit position; align to the lower exponent and compare.
  if (a.exp2 == b.exp2) {
    auto c = a.mantissa <=> b.mantissa;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (a.exp2 > b.exp2) {
    auto c = (a.mantissa << static_cast<std::size_t>(a.exp2 - b.exp2)) <=>
             b.mantissa;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  auto c = a.mantissa <=>
           (b.mantissa << static_cast<std::size_t>(b.exp2 - a.exp2));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

int compare(const ExactValue& a, const ExactValue& b) {
  if (a.is_zero() && b.is_zero()) return 0;
  if (a.negative != b.negative) {
    if (a.is_zero()) return b.negative ? 1 : -1;
    if (b.is_zero()) return a.negative ? -1 : 1;
    return a.negative ? -1 : 1;
  }
  int c = compare_abs(a, b);
  return a.negative ? -c : c;
}

}  // namespace hubfp
