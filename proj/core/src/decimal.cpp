// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hubfp/decimal.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

namespace hubfp {

DecimalNumber parse_decimal(std::string_view text) {
  std::string_view rest = text;
  DecimalNumber out;
  auto bad = [&](const char* why) {
    throw std::invalid_argument("invalid decimal literal '" +
                                std::string(text) + "': " + why);
  };
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    out.negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  int digits_seen = 0;
  int frac_digits = 0;
  bool in_fraction = false;
  std::size_t i = 0;
  for (; i < rest.size(); ++i) {
    char c = rest[i];
    if (c >= '0' && c <= '9') {
      out.digits.mul_u64(10);
      out.digits += BigUint(static_cast<u64>(c - '0'));
      ++digits_seen;
      if (in_fraction) ++frac_digits;
    } else if (c == '.') {
      if (in_fraction) bad("second '.'");
      in_fraction = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      bad("unexpected character");
    }
  }
  if (digits_seen == 0) bad("no digits");
  long exp10 = 0;
  if (i < rest.size()) {  // exponent part
    std::string_view e = rest.substr(i + 1);
    bool eneg = false;
    if (!e.empty() && (e.front() == '+' || e.front() == '-')) {
      eneg = e.front() == '-';
      e.remove_prefix(1);
    }
    if (e.empty()) bad("empty exponent");
    for (char c : e) {
      if (c < '0' || c > '9') bad("bad exponent digit");
      exp10 = exp10 * 10 + (c - '0');
      if (exp10 > 9999) bad("exponent out of range");
    }
    if (eneg) exp10 = -exp10;
  }
  long p = static_cast<long>(frac_digits) - exp10;
  if (p < 0) {
    for (long k = 0; k < -p; ++k) out.digits.mul_u64(10);
    p = 0;
  }
  out.pow10 = static_cast<int>(p);
  if (out.digits.is_zero()) out.pow10 = 0;
  return out;
}

namespace {

// floor(n / 10^k), and whether anything nonzero was discarded.
BigUint div_pow10(BigUint n, int k, bool& inexact) {
  while (k >= 9) {
    if (n.divmod_u32(1000000000u) != 0) inexact = true;
    k -= 9;
  }
  if (k > 0) {
    u32 d = 1;
    for (int i = 0; i < k; ++i) d *= 10;
    if (n.divmod_u32(d) != 0) inexact = true;
  }
  return n;
}

// Scaled significand of |d| = digits / 10^pow10: the leading f+2 bits
// (weights 2^0 .. 2^-(f+1) of the normalized significand) plus an exact
// sticky flag for everything below, and the normalized exponent.
struct Scaled {
  bool zero = false;
  i64 eprime = 0;
  u128 sig = 0;  // in [2^(f+1), 2^(f+2))
  bool sticky = false;
};

Scaled scale_decimal(const DecimalNumber& d, int f) {
  Scaled out;
  if (d.digits.is_zero()) {
    out.zero = true;
    return out;
  }
  BigUint den(1);
  for (int i = 0; i < d.pow10; ++i) den.mul_u64(10);
  // eprime = floor(log2(value)); the bit-length gap is off by at most one.
  i64 guess = static_cast<i64>(d.digits.bit_length()) -
              static_cast<i64>(den.bit_length());
  auto value_at_least_pow2 = [&](i64 e) {
    if (e >= 0) return d.digits >= (den << static_cast<std::size_t>(e));
    return (d.digits << static_cast<std::size_t>(-e)) >= den;
  };
  i64 eprime = value_at_least_pow2(guess + 1) ? guess + 1
               : value_at_least_pow2(guess)   ? guess
                                              : guess - 1;
  // sig = floor(value * 2^(f+1-eprime)), sticky = remainder != 0.
  i64 shift = f + 1 - eprime;
  BigUint num = d.digits;
  bool inexact = false;
  if (shift >= 0) {
    num <<= static_cast<std::size_t>(shift);
    num = div_pow10(std::move(num), d.pow10, inexact);
  } else {
    num = div_pow10(std::move(num), d.pow10, inexact);
    if (num.any_bits_below(static_cast<std::size_t>(-shift))) inexact = true;
    num >>= static_cast<std::size_t>(-shift);
  }
  out.eprime = eprime;
  out.sig = num.to_u128();
  out.sticky = inexact;
  return out;
}

}  // namespace

HubFloat decimal_to_hub(const DecimalNumber& d, const FormatSpec& spec) {
  int f = spec.frac_bits();
  Scaled s = scale_decimal(d, f);
  if (s.zero) return HubFloat::zero(spec, d.negative);
  if (s.eprime > spec.emax()) return HubFloat::inf(spec, d.negative);
  if (s.eprime < spec.emin()) return HubFloat::zero(spec, d.negative);
  // Truncation is the rounding.
  u64 frac = static_cast<u64>(s.sig >> 1) & spec.frac_mask();
  return HubFloat::make(spec, d.negative,
                        static_cast<u32>(s.eprime + spec.exp_bias()), frac);
}

ConvFloat decimal_to_conv_rne(const DecimalNumber& d,
                              const FormatSpec& spec) {
  int f = spec.frac_bits();
  Scaled s = scale_decimal(d, f);
  if (s.zero) return ConvFloat::zero(spec, d.negative);
  u128 kept = s.sig >> 1;
  bool round_bit = (s.sig & 1) != 0;
  i64 eprime = s.eprime;
  if (round_bit && (s.sticky || (kept & 1))) {
    ++kept;
    if (kept == (u128{1} << (f + 1))) {
      kept >>= 1;
      ++eprime;
    }
  }
  if (eprime > spec.emax()) return ConvFloat::inf(spec, d.negative);
  if (eprime < spec.emin()) return ConvFloat::zero(spec, d.negative);
  return ConvFloat::make(spec, d.negative,
                         static_cast<u32>(eprime + spec.exp_bias()),
                         static_cast<u64>(kept) & spec.frac_mask());
}

}  // namespace hubfp
