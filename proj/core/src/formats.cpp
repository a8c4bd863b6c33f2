// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hubfp/formats.hpp"

#include <stdexcept>
#include <string>

namespace hubfp {

const char* to_string(ValueClass c) {
  switch (c) {
    case ValueClass::Zero:
      return "Zero";
    case ValueClass::Normal:
      return "Normal";
    case ValueClass::Inf:
      return "Inf";
    case ValueClass::NaN:
      return "NaN";
  }
  return "?";
}

FormatSpec::FormatSpec(int exp_bits, int frac_bits)
    : exp_bits_(exp_bits), frac_bits_(frac_bits) {
  if (exp_bits < 2 || exp_bits > 15)
    throw std::invalid_argument("FormatSpec: exp_bits " +
                                std::to_string(exp_bits) +
                                " outside [2, 15]");
  if (frac_bits < 1 || frac_bits > 63)
    throw std::invalid_argument("FormatSpec: frac_bits " +
                                std::to_string(frac_bits) +
                                " outside [1, 63]");
}

namespace {

template <class F>
ValueClass classify(const F& v) {
  if (v.exp_field == 0) return ValueClass::Zero;
  if (v.exp_field == v.spec.exp_field_max())
    return v.frac_field != 0 ? ValueClass::NaN : ValueClass::Inf;
  return ValueClass::Normal;
}

template <class F>
u64 pack(const F& v) {
  if (v.spec.total_bits() > 64)
    throw std::domain_error("packed form wider than 64 bits");
  return (u64{v.sign} << (v.spec.exp_bits() + v.spec.frac_bits())) |
         (u64{v.exp_field} << v.spec.frac_bits()) | v.frac_field;
}

template <class F>
F unpack(const FormatSpec& spec, u64 bits) {
  if (spec.total_bits() > 64)
    throw std::domain_error("packed form wider than 64 bits");
  if (spec.total_bits() < 64 && (bits >> spec.total_bits()) != 0)
    throw std::invalid_argument("bit pattern wider than the format");
  F v;
  v.spec = spec;
  v.frac_field = bits & spec.frac_mask();
  v.exp_field = static_cast<u32>((bits >> spec.frac_bits()) &
                                 spec.exp_field_max());
  v.sign = ((bits >> (spec.exp_bits() + spec.frac_bits())) & 1) != 0;
  return v;
}

template <class F>
F checked_make(const FormatSpec& spec, bool sign, u32 exp_field,
               u64 frac_field) {
  if (exp_field > spec.exp_field_max())
    throw std::invalid_argument("exp_field out of range for the format");
  if (frac_field > spec.frac_mask())
    throw std::invalid_argument("frac_field out of range for the format");
  F v;
  v.spec = spec;
  v.sign = sign;
  v.exp_field = exp_field;
  v.frac_field = frac_field;
  return v;
}

}  // namespace

ValueClass HubFloat::cls() const { return classify(*this); }
ValueClass ConvFloat::cls() const { return classify(*this); }

u64 HubFloat::bits() const { return pack(*this); }
u64 ConvFloat::bits() const { return pack(*this); }

HubFloat HubFloat::from_bits(const FormatSpec& spec, u64 bits) {
  return unpack<HubFloat>(spec, bits);
}
ConvFloat ConvFloat::from_bits(const FormatSpec& spec, u64 bits) {
  return unpack<ConvFloat>(spec, bits);
}

HubFloat HubFloat::make(const FormatSpec& spec, bool sign, u32 exp_field,
                        u64 frac_field) {
  return checked_make<HubFloat>(spec, sign, exp_field, frac_field);
}
ConvFloat ConvFloat::make(const FormatSpec& spec, bool sign, u32 exp_field,
                          u64 frac_field) {
  return checked_make<ConvFloat>(spec, sign, exp_field, frac_field);
}

HubFloat HubFloat::zero(const FormatSpec& spec, bool sign) {
  return {spec, sign, 0, 0};
}
HubFloat HubFloat::inf(const FormatSpec& spec, bool sign) {
  return {spec, sign, spec.exp_field_max(), 0};
}
HubFloat HubFloat::quiet_nan(const FormatSpec& spec) {
  return {spec, false, spec.exp_field_max(),
          u64{1} << (spec.frac_bits() - 1)};
}

ConvFloat ConvFloat::zero(const FormatSpec& spec, bool sign) {
  return {spec, sign, 0, 0};
}
ConvFloat ConvFloat::inf(const FormatSpec& spec, bool sign) {
  return {spec, sign, spec.exp_field_max(), 0};
}
ConvFloat ConvFloat::quiet_nan(const FormatSpec& spec) {
  return {spec, false, spec.exp_field_max(),
          u64{1} << (spec.frac_bits() - 1)};
}

DecodedValue decode_hub(const HubFloat& h) {
  DecodedValue d;
  d.cls = h.cls();
  d.sign = h.sign;
  if (d.cls != ValueClass::Normal) return d;
  int f = h.spec.frac_bits();
  // (1 + frac * 2^-f + 2^-(f+1)) * 2^E  ==  (2^(f+1) + 2*frac + 1) * 2^(E-f-1)
  u128 scaled = (u128{1} << (f + 1)) | (u128{h.frac_field} << 1) | 1;
  d.value = ExactValue::make(h.sign, BigUint::from_u128(scaled),
                             h.unbiased_exp() - f - 1);
  return d;
}

DecodedValue decode_conv(const ConvFloat& c) {
  DecodedValue d;
  d.cls = c.cls();
  d.sign = c.sign;
  if (d.cls != ValueClass::Normal) return d;
  int f = c.spec.frac_bits();
  u128 scaled = (u128{1} << f) | c.frac_field;
  d.value = ExactValue::make(c.sign, BigUint::from_u128(scaled),
                             c.unbiased_exp() - f);
  return d;
}

u128 operational_significand(const HubFloat& h) {
  if (h.cls() != ValueClass::Normal)
    throw std::domain_error(
        std::string("operational_significand: ") + to_string(h.cls()) +
        " has no operational form");
  int f = h.spec.frac_bits();
  return (u128{1} << (f + 1)) | (u128{h.frac_field} << 1) | 1;
}

HubFloat round_exact_to_hub(const ExactValue& v, const FormatSpec& spec) {
  if (v.is_zero()) return HubFloat::zero(spec, v.negative);
  int f = spec.frac_bits();
  i64 eprime = v.msb_exp();
  if (eprime > spec.emax()) return HubFloat::inf(spec, v.negative);
  if (eprime < spec.emin()) return HubFloat::zero(spec, v.negative);
  std::size_t len = v.mantissa.bit_length();
  u64 top;  // leading 1 plus the next f bits of the significand
  if (len - 1 >= static_cast<std::size_t>(f)) {
    top = (v.mantissa >> (len - 1 - f)).to_u64();
  } else {
    top = v.mantissa.to_u64() << (f - (len - 1));
  }
  u64 frac = top & spec.frac_mask();
  return HubFloat::make(spec, v.negative,
                        static_cast<u32>(eprime + spec.exp_bias()), frac);
}

HubFloat round_exact_to_hub(const DecodedValue& v, const FormatSpec& spec) {
  switch (v.cls) {
    case ValueClass::NaN:
      return HubFloat::quiet_nan(spec);
    case ValueClass::Inf:
      return HubFloat::inf(spec, v.sign);
    case ValueClass::Zero:
      return HubFloat::zero(spec, v.sign);
    case ValueClass::Normal:
      return round_exact_to_hub(v.value, spec);
  }
  return HubFloat::quiet_nan(spec);
}

ConvFloat round_exact_to_conv_rne(const ExactValue& v,
                                  const FormatSpec& spec) {
  if (v.is_zero()) return ConvFloat::zero(spec, v.negative);
  int f = spec.frac_bits();
  i64 eprime = v.msb_exp();
  std::size_t len = v.mantissa.bit_length();
  u64 kept;  // 1 + f significand bits
  if (len - 1 > static_cast<std::size_t>(f)) {
    std::size_t drop = len - 1 - f;
    kept = (v.mantissa >> drop).to_u64();
    bool round_bit = v.mantissa.bit(drop - 1);
    bool sticky = v.mantissa.any_bits_below(drop - 1);
    if (round_bit && (sticky || (kept & 1))) {
      ++kept;
      if (kept == (u64{1} << (f + 1))) {  // 1.11..1 rounded up a binade
        kept >>= 1;
        ++eprime;
      }
    }
  } else {
    kept = v.mantissa.to_u64() << (f - (len - 1));
  }
  if (eprime > spec.emax()) return ConvFloat::inf(spec, v.negative);
  if (eprime < spec.emin()) return ConvFloat::zero(spec, v.negative);
  return ConvFloat::make(spec, v.negative,
                         static_cast<u32>(eprime + spec.exp_bias()),
                         kept & spec.frac_mask());
}

ConvFloat round_exact_to_conv_rne(const DecodedValue& v,
                                  const FormatSpec& spec) {
  switch (v.cls) {
    case ValueClass::NaN:
      return ConvFloat::quiet_nan(spec);
    case ValueClass::Inf:
      return ConvFloat::inf(spec, v.sign);
    case ValueClass::Zero:
      return ConvFloat::zero(spec, v.sign);
    case ValueClass::Normal:
      return round_exact_to_conv_rne(v.value, spec);
  }
  return ConvFloat::quiet_nan(spec);
}

}  // namespace hubfp
