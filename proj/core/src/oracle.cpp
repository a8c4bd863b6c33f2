// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hubfp/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hubfp {

ExactValue exact_add(const ExactValue& a, const ExactValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  i64 e = std::min(a.exp2, b.exp2);
  BigUint ma = a.mantissa << static_cast<std::size_t>(a.exp2 - e);
  BigUint mb = b.mantissa << static_cast<std::size_t>(b.exp2 - e);
  if (a.negative == b.negative)
    return ExactValue::make(a.negative, ma + mb, e);
  auto order = ma <=> mb;
  if (order == 0) return ExactValue::zero();
  if (order > 0) return ExactValue::make(a.negative, ma - mb, e);
  return ExactValue::make(b.negative, mb - ma, e);
}

NearestHubOracle::NearestHubOracle(const FormatSpec& spec) : spec_(spec) {
  if (spec.exp_bits() > 8 || spec.frac_bits() > 8)
    throw std::invalid_argument(
        "NearestHubOracle: enumeration guarded to exp_bits <= 8, "
        "frac_bits <= 8");
  // Normal encodings ordered by (exp_field, frac_field) are ordered by
  // value, so the table comes out sorted by construction.
  for (u32 ef = 1; ef < spec.exp_field_max(); ++ef) {
    for (u64 ff = 0; ff <= spec.frac_mask(); ++ff) {
      HubFloat h = HubFloat::make(spec, false, ef, ff);
      positives_.push_back({decode_hub(h).value, h});
    }
  }
}

std::vector<HubFloat> NearestHubOracle::nearest(const ExactValue& v) const {
  ExactValue mag = v.abs();
  auto it = std::lower_bound(
      positives_.begin(), positives_.end(), mag,
      [](const Entry& e, const ExactValue& x) {
        return compare_abs(e.value, x) < 0;
      });
  std::vector<const Entry*> candidates;
  if (it != positives_.end()) candidates.push_back(&*it);
  if (it != positives_.begin()) candidates.push_back(&*(it - 1));

  ExactValue best_dist;
  std::vector<HubFloat> best;
  for (const Entry* e : candidates) {
    ExactValue dist = exact_sub(e->value, mag).abs();
    int cmp = best.empty() ? -1 : compare_abs(dist, best_dist);
    if (cmp < 0) {
      best_dist = dist;
      best.assign(1, e->enc);
    } else if (cmp == 0) {
      best.push_back(e->enc);
    }
  }
  for (HubFloat& h : best) h.sign = v.negative;
  if (v.is_zero()) {
    // Equidistant pair straddling zero: +/- the smallest normal.
    best.assign(1, positives_.front().enc);
    HubFloat neg = positives_.front().enc;
    neg.sign = true;
    best.insert(best.begin(), neg);
    return best;
  }
  std::sort(best.begin(), best.end(),
            [](const HubFloat& a, const HubFloat& b) {
              return compare(decode_hub(a).value, decode_hub(b).value) < 0;
            });
  return best;
}

std::vector<HubFloat> nearest_hub_bruteforce(const ExactValue& v,
                                             const FormatSpec& spec) {
  return NearestHubOracle(spec).nearest(v);
}

namespace {

// Special-value algebra shared by both reference adders. Returns true and
// fills `out` when a bypass applies (any non-Normal operand).
template <class F>
bool special_add(const F& x, const F& y, F& out) {
  ValueClass cx = x.cls(), cy = y.cls();
  if (cx == ValueClass::Normal && cy == ValueClass::Normal) return false;
  if (cx == ValueClass::NaN || cy == ValueClass::NaN) {
    out = F::quiet_nan(x.spec);
    return true;
  }
  if (cx == ValueClass::Inf && cy == ValueClass::Inf) {
    out = x.sign == y.sign ? F::inf(x.spec, x.sign) : F::quiet_nan(x.spec);
    return true;
  }
  if (cx == ValueClass::Inf) {
    out = F::inf(x.spec, x.sign);
    return true;
  }
  if (cy == ValueClass::Inf) {
    out = F::inf(y.spec, y.sign);
    return true;
  }
  if (cx == ValueClass::Zero && cy == ValueClass::Zero) {
    out = F::zero(x.spec, x.sign && y.sign);
    return true;
  }
  if (cx == ValueClass::Zero) {
    out = y;
    return true;
  }
  out = x;
  return true;
}

}  // namespace

HubFloat reference_hub_add(const HubFloat& x, const HubFloat& y) {
  if (x.spec != y.spec)
    throw std::invalid_argument("reference_hub_add: operand specs differ");
  HubFloat out;
  if (special_add(x, y, out)) return out;
  ExactValue sum = exact_add(decode_hub(x).value, decode_hub(y).value);
  if (sum.is_zero()) return HubFloat::zero(x.spec);  // exact cancellation
  return round_exact_to_hub(sum, x.spec);
}

ConvFloat reference_conv_add(const ConvFloat& x, const ConvFloat& y) {
  if (x.spec != y.spec)
    throw std::invalid_argument("reference_conv_add: operand specs differ");
  ConvFloat out;
  if (special_add(x, y, out)) return out;
  ExactValue sum = exact_add(decode_conv(x).value, decode_conv(y).value);
  if (sum.is_zero()) return ConvFloat::zero(x.spec);
  return round_exact_to_conv_rne(sum, x.spec);
}

}  // namespace hubfp
