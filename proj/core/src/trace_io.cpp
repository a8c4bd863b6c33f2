// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0

#include "hubfp/trace_io.hpp"

#include <sstream>

namespace hubfp {

std::string render_word(u128 bits, int total_width, int int_bits) {
  std::string out;
  for (int i = total_width - 1; i >= 0; --i) {
    out.push_back(((bits >> i) & 1) ? '1' : '0');
    if (i == total_width - int_bits && i != 0) out += "·";
    if (i == 1) out.push_back('|');
  }
  return out;
}

std::string hex_bits(u64 bits, int total_bits) {
  static const char* digits = "0123456789ABCDEF";
  int nibbles = (total_bits + 3) / 4;
  std::string out = "0x";
  for (int i = nibbles - 1; i >= 0; --i)
    out.push_back(digits[(bits >> (4 * i)) & 0xF]);
  return out;
}

namespace {

const char* json_bool(bool b) { return b ? "true" : "false"; }

void append_aligned(std::ostringstream& os, const AlignedWord& w) {
  os << "{\"bits\":\"" << render_word(w)
     << "\",\"negative_flag\":" << json_bool(w.negative_flag) << "}";
}

std::string spec_json(const FormatSpec& spec) {
  std::ostringstream os;
  os << "{\"exp_bits\":" << spec.exp_bits()
     << ",\"frac_bits\":" << spec.frac_bits() << "}";
  return os.str();
}

}  // namespace

std::string to_json(const HubAddTrace& tr) {
  std::ostringstream os;
  os << "{\"stage_count\":" << HubAddTrace::stage_count
     << ",\"bypassed\":" << json_bool(tr.bypassed);
  if (!tr.bypassed) {
    os << ",\"stage1\":{\"swapped\":" << json_bool(tr.stage1.swapped)
       << ",\"exp_diff\":" << tr.stage1.exp_diff << ",\"effective_op\":\""
       << to_string(tr.stage1.effective_op) << "\"}";
    os << ",\"stage2\":{\"aligned_small\":";
    append_aligned(os, tr.stage2.aligned_small);
    os << ",\"sticky\":" << json_bool(tr.stage2.sticky)
       << ",\"complemented\":" << json_bool(tr.stage2.complemented) << "}";
    os << ",\"stage3\":{\"raw_sum\":\""
       << render_word(tr.stage3.raw_sum, tr.stage3.raw_width, 2)
       << "\",\"overflow\":" << json_bool(tr.stage3.overflow)
       << ",\"corrected\":";
    append_aligned(os, tr.stage3.corrected);
    os << ",\"result_exp\":" << tr.stage3.result_exp << "}";
    os << ",\"stage4\":{\"lzc\":" << tr.stage4.lzc << "}";
    os << ",\"stage5\":{\"normalized\":\""
       << render_word(tr.stage5.normalized, tr.stage5.norm_width, 1)
       << "\",\"final_exp\":" << tr.stage5.final_exp << ",\"result\":\""
       << hex_bits(tr.stage5.result.bits(), tr.stage5.result.spec.total_bits())
       << "\"}";
  } else {
    os << ",\"result\":\""
       << hex_bits(tr.stage5.result.bits(), tr.stage5.result.spec.total_bits())
       << "\"";
  }
  os << "}";
  return os.str();
}

std::string to_json(const ConvAddTrace& tr) {
  std::ostringstream os;
  os << "{\"stage_count\":" << ConvAddTrace::stage_count
     << ",\"bypassed\":" << json_bool(tr.bypassed);
  if (!tr.bypassed) {
    os << ",\"stage1\":{\"swapped\":" << json_bool(tr.stage1.swapped)
       << ",\"exp_diff\":" << tr.stage1.exp_diff << ",\"effective_op\":\""
       << to_string(tr.stage1.effective_op) << "\"}";
    os << ",\"stage2\":{\"aligned_small\":";
    append_aligned(os, tr.stage2.aligned_small);
    os << ",\"sticky\":" << json_bool(tr.stage2.sticky)
       << ",\"complemented\":" << json_bool(tr.stage2.complemented) << "}";
    os << ",\"stage3\":{\"raw_sum\":\""
       << render_word(tr.stage3.raw_sum, tr.stage3.raw_width, 2)
       << "\",\"overflow\":" << json_bool(tr.stage3.overflow)
       << ",\"corrected\":";
    append_aligned(os, tr.stage3.corrected);
    os << ",\"result_exp\":" << tr.stage3.result_exp << "}";
    os << ",\"stage4\":{\"lzc\":" << tr.stage4.lzc << "}";
    os << ",\"stage5\":{\"normalized\":\""
       << render_word(tr.stage5.normalized, tr.stage5.norm_width, 1)
       << "\",\"final_exp\":" << tr.stage5.final_exp << "}";
    os << ",\"stage6\":{\"round_increment\":"
       << json_bool(tr.stage6.round_increment) << ",\"post_round_overflow\":"
       << json_bool(tr.stage6.post_round_overflow) << ",\"result\":\""
       << hex_bits(tr.stage6.result.bits(), tr.stage6.result.spec.total_bits())
       << "\"}";
  } else {
    os << ",\"result\":\""
       << hex_bits(tr.stage6.result.bits(), tr.stage6.result.spec.total_bits())
       << "\"";
  }
  os << "}";
  return os.str();
}

std::string to_json(const VerifyReport& report) {
  std::ostringstream os;
  os << "{\"spec\":" << spec_json(report.spec)
     << ",\"pairs_tested\":" << report.pairs_tested << ",\"mismatches\":[";
  int total = report.spec.total_bits();
  for (std::size_t i = 0; i < report.mismatches.size(); ++i) {
    const Mismatch& m = report.mismatches[i];
    if (i != 0) os << ",";
    os << "{\"adder\":\"" << m.adder << "\",\"x\":\""
       << hex_bits(m.x_bits, total) << "\",\"y\":\"" << hex_bits(m.y_bits, total)
       << "\",\"got\":\"" << hex_bits(m.got_bits, total) << "\",\"expected\":\""
       << hex_bits(m.expected_bits, total) << "\"}";
  }
  os << "],\"invariant_violations\":[";
  for (std::size_t i = 0; i < report.invariant_violations.size(); ++i) {
    if (i != 0) os << ",";
    os << "\"" << report.invariant_violations[i] << "\"";
  }
  os << "]}";
  return os.str();
}

std::string to_json(const ErrorStats& stats) {
  std::ostringstream os;
  os.precision(17);
  os << "{\"samples\":" << stats.samples
     << ",\"max_abs_err_in_result_ulps\":" << stats.max_abs_err_in_result_ulps
     << ",\"rms_err_hub\":" << stats.rms_err_hub
     << ",\"rms_err_conv\":" << stats.rms_err_conv
     << ",\"half_ulp_violations\":" << stats.half_ulp_violations << "}";
  return os.str();
}

std::string to_json(const StructuralReport& report) {
  std::ostringstream os;
  os << "{\"hub_stages\":" << report.hub_stages
     << ",\"conv_stages\":" << report.conv_stages
     << ",\"hub_datapath_bits\":" << report.hub_datapath_bits
     << ",\"conv_datapath_bits\":" << report.conv_datapath_bits << "}";
  return os.str();
}

std::string render_trace_text(const HubAddTrace& tr) {
  std::ostringstream os;
  if (tr.bypassed) {
    os << "stage1..5: bypassed (special operand)\n";
    return os.str();
  }
  os << "stage1: swapped=" << tr.stage1.swapped
     << " exp_diff=" << tr.stage1.exp_diff
     << " effective_op=" << to_string(tr.stage1.effective_op) << "\n";
  os << "stage2: aligned_small=" << render_word(tr.stage2.aligned_small)
     << " sticky=" << tr.stage2.sticky
     << " complemented=" << tr.stage2.complemented << "\n";
  os << "stage3: raw_sum="
     << render_word(tr.stage3.raw_sum, tr.stage3.raw_width, 2)
     << " overflow=" << tr.stage3.overflow
     << " corrected=" << render_word(tr.stage3.corrected)
     << " result_exp=" << tr.stage3.result_exp << "\n";
  os << "stage4: lzc=" << tr.stage4.lzc << "\n";
  os << "stage5: normalized="
     << render_word(tr.stage5.normalized, tr.stage5.norm_width, 1)
     << " final_exp=" << tr.stage5.final_exp << " result="
     << hex_bits(tr.stage5.result.bits(), tr.stage5.result.spec.total_bits())
     << "\n";
  return os.str();
}

std::string render_trace_text(const ConvAddTrace& tr) {
  std::ostringstream os;
  if (tr.bypassed) {
    os << "stage1..6: bypassed (special operand)\n";
    return os.str();
  }
  os << "stage1: swapped=" << tr.stage1.swapped
     << " exp_diff=" << tr.stage1.exp_diff
     << " effective_op=" << to_string(tr.stage1.effective_op) << "\n";
  os << "stage2: aligned_small=" << render_word(tr.stage2.aligned_small)
     << " sticky=" << tr.stage2.sticky
     << " complemented=" << tr.stage2.complemented << "\n";
  os << "stage3: raw_sum="
     << render_word(tr.stage3.raw_sum, tr.stage3.raw_width, 2)
     << " overflow=" << tr.stage3.overflow
     << " corrected=" << render_word(tr.stage3.corrected)
     << " result_exp=" << tr.stage3.result_exp << "\n";
  os << "stage4: lzc=" << tr.stage4.lzc << "\n";
  os << "stage5: normalized="
     << render_word(tr.stage5.normalized, tr.stage5.norm_width, 1)
     << " final_exp=" << tr.stage5.final_exp << "\n";
  os << "stage6: round_increment=" << tr.stage6.round_increment
     << " post_round_overflow=" << tr.stage6.post_round_overflow << " result="
     << hex_bits(tr.stage6.result.bits(), tr.stage6.result.spec.total_bits())
     << "\n";
  return os.str();
}

}  // namespace hubfp
