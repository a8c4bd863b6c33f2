// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "hubfp/formats.hpp"
#include "hubfp/types.hpp"

namespace hubfp {

struct Mismatch {
  std::string adder;  // "hub" or "conv"
  u64 x_bits = 0;
  u64 y_bits = 0;
  u64 got_bits = 0;
  u64 expected_bits = 0;
};

struct VerifyReport {
  FormatSpec spec{2, 1};
  u64 pairs_tested = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> invariant_violations;
  double elapsed_seconds = 0;  // informational; excluded from serialization

  bool passed() const {
    return mismatches.empty() && invariant_violations.empty();
  }
};

struct ErrorStats {
  u64 samples = 0;
  double max_abs_err_in_result_ulps = 0;
  double rms_err_hub = 0;
  double rms_err_conv = 0;
  u64 half_ulp_violations = 0;
};

struct StructuralReport {
  int hub_stages = 0;
  int conv_stages = 0;
  int hub_datapath_bits = 0;
  int conv_datapath_bits = 0;
};

}  // namespace hubfp
