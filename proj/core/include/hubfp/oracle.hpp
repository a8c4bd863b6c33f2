// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hubfp/exact_value.hpp"
#include "hubfp/formats.hpp"

namespace hubfp {

// Exact sum of two dyadic values. Associative and commutative with no
// rounding anywhere; this is the ground truth both adders are judged by.
ExactValue exact_add(const ExactValue& a, const ExactValue& b);

inline ExactValue exact_sub(const ExactValue& a, const ExactValue& b) {
  return exact_add(a, b.negated());
}

// Brute-force nearest-value search over every Normal HUB encoding of a
// small format. Independent of round_exact_to_hub: the table is built by
// decoding each encoding and the winner is picked by exact distance
// comparison. Guarded to exp_bits <= 8 and frac_bits <= 8.
//
// nearest() returns the minimizing set: one encoding, or two when v sits
// exactly halfway between neighbors (ascending value order).
class NearestHubOracle {
 public:
  explicit NearestHubOracle(const FormatSpec& spec);

  std::vector<HubFloat> nearest(const ExactValue& v) const;
  const FormatSpec& spec() const { return spec_; }

 private:
  struct Entry {
    ExactValue value;  // positive
    HubFloat enc;
  };
  FormatSpec spec_;
  std::vector<Entry> positives_;  // ascending
};

// One-shot convenience: enumerate, search, return the nearest set.
std::vector<HubFloat> nearest_hub_bruteforce(const ExactValue& v,
                                             const FormatSpec& spec);

// Reference adders: exact sum followed by the grid's own rounding rule,
// with IEEE-style special-value algebra (NaN absorbs, Inf +/- finite stays
// Inf, Inf + (-Inf) is NaN, exact cancellation gives +0). The pipelined
// adders must match these bit for bit.
HubFloat reference_hub_add(const HubFloat& x, const HubFloat& y);
ConvFloat reference_conv_add(const ConvFloat& x, const ConvFloat& y);

}  // namespace hubfp
