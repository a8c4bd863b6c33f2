// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <utility>

#include "hubfp/conv_adder.hpp"
#include "hubfp/formats.hpp"
#include "hubfp/harness_types.hpp"
#include "hubfp/hub_adder.hpp"

namespace hubfp {

// xoshiro256** seeded through splitmix64. A fixed, named generator keeps
// reports byte-identical across runs and implementations; bounded draws
// use rejection sampling, never the standard library distributions.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(u64 seed);
  u64 next();
  u64 next_below(u64 bound);  // uniform in [0, bound); pre: bound > 0

 private:
  u64 state_[4];
};

using HubAddFn =
    std::function<std::pair<HubFloat, HubAddTrace>(const HubFloat&,
                                                   const HubFloat&)>;
using ConvAddFn =
    std::function<std::pair<ConvFloat, ConvAddTrace>(const ConvFloat&,
                                                     const ConvFloat&)>;

// Run both adders on every ordered pair of bit patterns of the format (all
// 2^(1+e+f) encodings, special classes included), compare against the
// exact-arithmetic references, and re-check every module invariant on
// every trace. Guarded to 1+e+f <= 16 (at most 2^32 pairs).
VerifyReport exhaustive_verify(const FormatSpec& spec);

// Same sweep with replacement adders; used for mutation self-tests.
VerifyReport exhaustive_verify_with(const FormatSpec& spec,
                                    const HubAddFn& hub_fn,
                                    const ConvAddFn& conv_fn);

// n seeded pseudo-random ordered pairs, same per-pair checks. Reports are
// deterministic functions of (spec, n, seed). Throws when n == 0.
VerifyReport random_verify(const FormatSpec& spec, u64 n, u64 seed);

// Sample n exact reals (uniform significand at 2f+8 fraction bits, uniform
// exponent over the normal range minus a two-binade margin, random sign),
// round each into both grids and accumulate rounding errors in units of
// the result ULP. Every error must be at most half a ULP in both systems.
ErrorStats accuracy_compare(const FormatSpec& spec, u64 n, u64 seed);

// Stage counts and datapath widths, extracted from live traces of a probe
// addition rather than from constants.
StructuralReport structural_report(const FormatSpec& spec);

}  // namespace hubfp
