// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hubfp/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hubfp/oracle.hpp"
#include "hubfp/trace_io.hpp"

namespace hubfp {

namespace {

u64 splitmix64(u64& state) {
  state += 0x9E3779B97F4A7C15ull;
  u64 z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

u64 rotl(u64 x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256ss::Xoshiro256ss(u64 seed) {
  for (u64& s : state_) s = splitmix64(seed);
}

u64 Xoshiro256ss::next() {
  u64 result = rotl(state_[1] * 5, 7) * 9;
  u64 t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

u64 Xoshiro256ss::next_below(u64 bound) {
  // Reject the low non-multiple span so the modulo is unbiased.
  u64 threshold = (0 - bound) % bound;
  for (;;) {
    u64 v = next();
    if (v >= threshold) return v % bound;
  }
}

namespace {

u64 pattern_mask(const FormatSpec& spec) {
  int t = spec.total_bits();
  return t >= 64 ? ~u64{0} : (u64{1} << t) - 1;
}

// One ordered pair through both adders: compare against the exact
// references and re-check every module invariant the trace exposes.
class PairChecker {
 public:
  PairChecker(const FormatSpec& spec, const HubAddFn& hub_fn,
              const ConvAddFn& conv_fn, VerifyReport& report)
      : spec_(spec), f_(spec.frac_bits()), hub_fn_(hub_fn),
        conv_fn_(conv_fn), report_(report) {}

  void run(u64 x_bits, u64 y_bits) {
    ++report_.pairs_tested;
    check_hub(HubFloat::from_bits(spec_, x_bits),
              HubFloat::from_bits(spec_, y_bits));
    check_conv(ConvFloat::from_bits(spec_, x_bits),
               ConvFloat::from_bits(spec_, y_bits));
  }

 private:
  void violation(const char* adder, u64 x, u64 y, const std::string& what) {
    report_.invariant_violations.push_back(
        std::string(adder) + " x=" + hex_bits(x, spec_.total_bits()) +
        " y=" + hex_bits(y, spec_.total_bits()) + ": " + what);
  }

  void check_hub(const HubFloat& x, const HubFloat& y) {
    auto [result, tr] = hub_fn_(x, y);
    HubFloat expected = reference_hub_add(x, y);
    if (result != expected)
      report_.mismatches.push_back(
          {"hub", x.bits(), y.bits(), result.bits(), expected.bits()});

    auto fail = [&](const std::string& what) {
      violation("hub", x.bits(), y.bits(), what);
    };
    bool normals = x.cls() == ValueClass::Normal &&
                   y.cls() == ValueClass::Normal;
    if (tr.bypassed == normals) {
      fail("bypass flag inconsistent with operand classes");
      return;
    }
    if (tr.stage5.result != result)
      fail("trace result differs from returned result");
    if (tr.bypassed) return;

    if (tr.stage2.aligned_small.width != f_ + 3)
      fail("stage2 word width != f+3");
    if (tr.stage3.corrected.width != f_ + 3)
      fail("stage3 word width != f+3");
    if (tr.stage3.raw_width != f_ + 4) fail("stage3 raw width != f+4");
    if (tr.stage5.norm_width != f_ + 3) fail("stage5 word width != f+3");

    const HubFloat& large = tr.stage1.swapped ? y : x;
    const HubFloat& small = tr.stage1.swapped ? x : y;
    int d = tr.stage1.exp_diff;
    if (d < 0) fail("negative exponent difference");

    // Sticky theorem: the OR of the bits of the shifted small operand
    // falling below the retained window is exactly (d > 0), because the
    // operational LSB is 1. Recompute it from the unshifted operand.
    u128 op_small = operational_significand(small);
    bool recomputed_or =
        (op_small & low_mask(std::min(d, f_ + 2))) != 0;
    if (recomputed_or != (d > 0)) fail("discarded-bits OR != (d > 0)");
    if (tr.stage2.sticky != recomputed_or)
      fail("stage2 sticky != recomputed discarded-bits OR");

    if (stage4_lzc(tr.stage3.corrected) != tr.stage4.lzc)
      fail("stage4 lzc inconsistent with stage3 word");

    ExactValue sum = exact_add(decode_hub(x).value, decode_hub(y).value);

    if (result.cls() == ValueClass::Normal) {
      // Truncation re-derivation: the packed fraction must be the bits of
      // the normalized word and nothing else (no increment anywhere).
      if (tr.stage4.lzc >= f_ + 3) {
        fail("cancellation sentinel with Normal result");
      } else {
        u128 normalized =
            (tr.stage3.corrected.bits << tr.stage4.lzc) & low_mask(f_ + 3);
        if (normalized != tr.stage5.normalized)
          fail("stage5 normalized word inconsistent");
        int final_exp = tr.stage3.result_exp - tr.stage4.lzc;
        if (final_exp != tr.stage5.final_exp)
          fail("stage5 exponent inconsistent");
        u64 frac = static_cast<u64>(normalized >> 2) & spec_.frac_mask();
        if (result.frac_field != frac ||
            static_cast<int>(result.exp_field) !=
                final_exp + spec_.exp_bias() ||
            result.sign != large.sign)
          fail("result fields are not pure truncation of the window");
      }

      ExactValue err = exact_sub(decode_hub(result).value, sum);
      ExactValue bound =
          ExactValue::pow2(false, result.unbiased_exp() - f_ - 1);
      if (compare_abs(err, bound) > 0)
        fail("error exceeds half ULP of the result binade");
      if (round_exact_to_hub(decode_hub(result).value, spec_) != result)
        fail("result does not round-trip");

      if (d <= 1 && tr.stage1.effective_op == EffectiveOp::sub) {
        // Aligned datapath is lossless here: the window must hold the
        // exact difference before truncation.
        ExactValue window = ExactValue::make(
            false, BigUint::from_u128(tr.stage5.normalized),
            static_cast<i64>(tr.stage5.final_exp) - (f_ + 2));
        if (compare_abs(window, sum) != 0)
          fail("d<=1 subtraction lost information before truncation");
      }
    } else if (result.cls() == ValueClass::Zero && sum.is_zero()) {
      if (result.sign) fail("exact cancellation must give +0");
    }
  }

  void check_conv(const ConvFloat& x, const ConvFloat& y) {
    auto [result, tr] = conv_fn_(x, y);
    ConvFloat expected = reference_conv_add(x, y);
    if (result != expected)
      report_.mismatches.push_back(
          {"conv", x.bits(), y.bits(), result.bits(), expected.bits()});

    auto fail = [&](const std::string& what) {
      violation("conv", x.bits(), y.bits(), what);
    };
    bool normals = x.cls() == ValueClass::Normal &&
                   y.cls() == ValueClass::Normal;
    if (tr.bypassed == normals) {
      fail("bypass flag inconsistent with operand classes");
      return;
    }
    if (tr.stage6.result != result)
      fail("trace result differs from returned result");
    if (tr.bypassed) return;

    if (tr.stage2.aligned_small.width != f_ + 4)
      fail("stage2 word width != f+4");
    if (tr.stage3.corrected.width != f_ + 4)
      fail("stage3 word width != f+4");
    if (tr.stage3.raw_width != f_ + 5) fail("stage3 raw width != f+5");
    if (tr.stage5.norm_width != f_ + 4) fail("stage5 word width != f+4");

    const ConvFloat& small = tr.stage1.swapped ? x : y;
    int d = tr.stage1.exp_diff;

    // Conventional sticky is a real OR of the discarded alignment bits.
    u128 sig_full = conv_significand(small) << 3;
    bool recomputed_or =
        (sig_full & low_mask(std::min(d, f_ + 4))) != 0;
    if (tr.stage2.sticky != recomputed_or)
      fail("stage2 sticky != OR of discarded bits");

    AlignedWord corrected = tr.stage3.corrected;
    int lzc = corrected.bits == 0 ? corrected.width : 0;
    if (corrected.bits != 0)
      while (((corrected.bits >> (corrected.width - 1 - lzc)) & 1) == 0)
        ++lzc;
    if (lzc != tr.stage4.lzc) fail("stage4 lzc inconsistent");

    if (tr.stage6.post_round_overflow && !tr.stage6.round_increment)
      fail("post-round overflow without an increment");

    if (result.cls() == ValueClass::Normal) {
      ExactValue sum =
          exact_add(decode_conv(x).value, decode_conv(y).value);
      ExactValue err = exact_sub(decode_conv(result).value, sum);
      ExactValue bound =
          ExactValue::pow2(false, result.unbiased_exp() - f_ - 1);
      if (compare_abs(err, bound) > 0)
        fail("error exceeds half ULP of the result binade");
      if (round_exact_to_conv_rne(decode_conv(result).value, spec_) !=
          result)
        fail("result does not round-trip");
    }
  }

  FormatSpec spec_;
  int f_;
  const HubAddFn& hub_fn_;
  const ConvAddFn& conv_fn_;
  VerifyReport& report_;
};

}  // namespace

VerifyReport exhaustive_verify_with(const FormatSpec& spec,
                                    const HubAddFn& hub_fn,
                                    const ConvAddFn& conv_fn) {
  if (spec.total_bits() > 16)
    throw std::invalid_argument(
        "exhaustive_verify: guarded to 1+e+f <= 16 (pair count 2^32)");
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.spec = spec;
  PairChecker checker(spec, hub_fn, conv_fn, report);
  u64 encodings = u64{1} << spec.total_bits();
  for (u64 x = 0; x < encodings; ++x)
    for (u64 y = 0; y < encodings; ++y) checker.run(x, y);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

VerifyReport exhaustive_verify(const FormatSpec& spec) {
  return exhaustive_verify_with(
      spec, [](const HubFloat& a, const HubFloat& b) { return hub_add(a, b); },
      [](const ConvFloat& a, const ConvFloat& b) { return conv_add(a, b); });
}

VerifyReport random_verify(const FormatSpec& spec, u64 n, u64 seed) {
  if (n == 0) throw std::invalid_argument("random_verify: n must be >= 1");
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.spec = spec;
  HubAddFn hub_fn = [](const HubFloat& a, const HubFloat& b) {
    return hub_add(a, b);
  };
  ConvAddFn conv_fn = [](const ConvFloat& a, const ConvFloat& b) {
    return conv_add(a, b);
  };
  PairChecker checker(spec, hub_fn, conv_fn, report);
  Xoshiro256ss rng(seed);
  u64 mask = pattern_mask(spec);
  for (u64 i = 0; i < n; ++i) {
    u64 x = rng.next() & mask;
    u64 y = rng.next() & mask;
    checker.run(x, y);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

namespace {

BigUint random_bits(Xoshiro256ss& rng, int nbits) {
  BigUint out;
  int chunks = (nbits + 63) / 64;
  for (int i = 0; i < chunks; ++i) {
    out <<= 64;
    out += BigUint(rng.next());
  }
  if (nbits % 64 != 0) out >>= (64 - nbits % 64);
  return out;
}

}  // namespace

ErrorStats accuracy_compare(const FormatSpec& spec, u64 n, u64 seed) {
  if (n == 0) throw std::invalid_argument("accuracy_compare: n must be >= 1");
  int lo = spec.emin() + 2, hi = spec.emax() - 2;
  if (lo > hi)
    throw std::invalid_argument(
        "accuracy_compare: exponent range too narrow for the two-binade "
        "sampling margin");
  int f = spec.frac_bits();
  int vbits = 2 * f + 8;  // fraction bits of each sampled significand
  Xoshiro256ss rng(seed);
  ErrorStats stats;
  stats.samples = n;
  double sum_sq_hub = 0, sum_sq_conv = 0;
  double max_ulps = 0;
  BigUint half_ulp_scaled = BigUint(1) << static_cast<std::size_t>(vbits - f - 1);

  for (u64 i = 0; i < n; ++i) {
    i64 eprime = lo + static_cast<i64>(rng.next_below(
                          static_cast<u64>(hi - lo + 1)));
    BigUint mant = (BigUint(1) << vbits) + random_bits(rng, vbits);
    bool sign = (rng.next() & 1) != 0;
    ExactValue v = ExactValue::make(sign, mant, eprime - vbits);

    HubFloat h = round_exact_to_hub(v, spec);
    ConvFloat c = round_exact_to_conv_rne(v, spec);

    // Both results stay Normal: the margin keeps eprime (plus at most one
    // round-up binade) inside the normal range.
    auto ulp_error = [&](const ExactValue& rounded, int result_exp,
                         double& sum_sq) {
      ExactValue err = exact_sub(rounded, v);
      // Everything lives on the grid 2^(eprime - vbits).
      i64 gexp = eprime - vbits;
      BigUint scaled;
      if (!err.is_zero())
        scaled = err.mantissa << static_cast<std::size_t>(err.exp2 - gexp);
      if (scaled > half_ulp_scaled) ++stats.half_ulp_violations;
      int ulp_shift = static_cast<int>(result_exp - f - gexp);
      double ulps = scaled.to_double() / std::ldexp(1.0, ulp_shift);
      sum_sq += ulps * ulps;
      max_ulps = std::max(max_ulps, ulps);
    };
    ulp_error(decode_hub(h).value, h.unbiased_exp(), sum_sq_hub);
    ulp_error(decode_conv(c).value, c.unbiased_exp(), sum_sq_conv);
  }
  stats.rms_err_hub = std::sqrt(sum_sq_hub / static_cast<double>(n));
  stats.rms_err_conv = std::sqrt(sum_sq_conv / static_cast<double>(n));
  stats.max_abs_err_in_result_ulps = max_ulps;
  return stats;
}

namespace {

int count_stage_records(const std::string& json) {
  int count = 0;
  std::size_t pos = 0;
  while ((pos = json.find("\"stage", pos)) != std::string::npos) {
    if (json.compare(pos, 13, "\"stage_count\"") != 0) ++count;
    pos += 6;
  }
  return count;
}

}  // namespace

StructuralReport structural_report(const FormatSpec& spec) {
  // Probe addition with a real alignment so each stage does work.
  HubFloat hx = HubFloat::make(spec, false, spec.exp_field_max() - 1, 0);
  HubFloat hy = HubFloat::make(spec, false, 1, spec.frac_mask());
  auto [hr, htr] = hub_add(hx, hy);
  ConvFloat cx = ConvFloat::make(spec, false, spec.exp_field_max() - 1, 0);
  ConvFloat cy = ConvFloat::make(spec, false, 1, spec.frac_mask());
  auto [cr, ctr] = conv_add(cx, cy);

  StructuralReport report;
  report.hub_stages = count_stage_records(to_json(htr));
  report.conv_stages = count_stage_records(to_json(ctr));
  report.hub_datapath_bits = htr.stage2.aligned_small.width;
  report.conv_datapath_bits = ctr.stage2.aligned_small.width;
  return report;
}

}  // namespace hubfp
