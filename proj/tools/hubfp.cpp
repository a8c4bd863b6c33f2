// hubfp: bit-accurate half-unit-biased (HUB) floating-point library
// Copyright 2026 The hubfp Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front door: encode/decode values, add with stage traces,
// run verification and accuracy campaigns, print structural info.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hubfp/conv_adder.hpp"
#include "hubfp/decimal.hpp"
#include "hubfp/formats.hpp"
#include "hubfp/harness.hpp"
#include "hubfp/hub_adder.hpp"
#include "hubfp/trace_io.hpp"

namespace {

using namespace hubfp;

struct SpecOpts {
  int exp_bits = 0;
  int frac_bits = 0;
  std::string preset;
};

void add_spec_options(CLI::App* cmd, SpecOpts& opts) {
  cmd->add_option("--exp", opts.exp_bits, "exponent field bits");
  cmd->add_option("--frac", opts.frac_bits, "stored fraction bits");
  cmd->add_option("--preset", opts.preset, "format preset: hub32 | hub64");
}

FormatSpec resolve_spec(const SpecOpts& opts) {
  if (!opts.preset.empty()) {
    if (opts.preset == "hub32") return FormatSpec::hub32();
    if (opts.preset == "hub64") return FormatSpec::hub64();
    throw std::invalid_argument("unknown preset '" + opts.preset +
                                "' (expected hub32 or hub64)");
  }
  if (opts.exp_bits == 0 || opts.frac_bits == 0)
    throw std::invalid_argument(
        "format not specified: pass --exp and --frac, or --preset");
  return FormatSpec(opts.exp_bits, opts.frac_bits);
}

u64 parse_bits(const std::string& text, const FormatSpec& spec) {
  auto bad = [&](const char* why) {
    throw std::invalid_argument("invalid bit pattern '" + text + "': " + why);
  };
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
    bad("expected a 0x-prefixed hex literal");
  if (text.size() > 2 + 16) bad("more than 64 bits");
  u64 v = 0;
  for (std::size_t i = 2; i < text.size(); ++i) {
    char c = text[i];
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else { bad("not a hex digit"); return 0; }
    v = (v << 4) | static_cast<u64>(digit);
  }
  if (spec.total_bits() < 64 && (v >> spec.total_bits()) != 0)
    bad("wider than the format");
  return v;
}

std::string value_text(const DecodedValue& d) {
  switch (d.cls) {
    case ValueClass::Zero:
      return d.sign ? "-0" : "0";
    case ValueClass::Inf:
      return d.sign ? "-inf" : "inf";
    case ValueClass::NaN:
      return "nan";
    case ValueClass::Normal:
      return d.value.to_decimal();
  }
  return "?";
}

std::string result_line(u64 bits, int total_bits, const DecodedValue& d) {
  std::string out = hex_bits(bits, total_bits) + "  (= " + value_text(d);
  if (d.cls == ValueClass::Normal) out += " exactly";
  return out + ")";
}

// Tokens inf / -inf / nan bypass the decimal parser.
std::optional<DecodedValue> parse_special(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(c)));
  DecodedValue d;
  if (t == "inf" || t == "+inf") {
    d.cls = ValueClass::Inf;
    return d;
  }
  if (t == "-inf") {
    d.cls = ValueClass::Inf;
    d.sign = true;
    return d;
  }
  if (t == "nan") {
    d.cls = ValueClass::NaN;
    return d;
  }
  return std::nullopt;
}

int run_info(const SpecOpts& opts) {
  FormatSpec spec = resolve_spec(opts);
  std::cout << to_json(structural_report(spec)) << "\n";
  return 0;
}

int run_encode(const SpecOpts& opts, const std::string& value, bool conv,
               const std::string& format) {
  FormatSpec spec = resolve_spec(opts);
  u64 bits;
  DecodedValue decoded;
  if (auto special = parse_special(value)) {
    if (conv) {
      ConvFloat c = round_exact_to_conv_rne(*special, spec);
      bits = c.bits();
      decoded = decode_conv(c);
    } else {
      HubFloat h = round_exact_to_hub(*special, spec);
      bits = h.bits();
      decoded = decode_hub(h);
    }
  } else {
    DecimalNumber d = parse_decimal(value);
    if (conv) {
      ConvFloat c = decimal_to_conv_rne(d, spec);
      bits = c.bits();
      decoded = decode_conv(c);
    } else {
      HubFloat h = decimal_to_hub(d, spec);
      bits = h.bits();
      decoded = decode_hub(h);
    }
  }
  if (format == "json") {
    std::cout << "{\"bits\":\"" << hex_bits(bits, spec.total_bits())
              << "\",\"class\":\"" << to_string(decoded.cls)
              << "\",\"value\":\"" << value_text(decoded) << "\"}\n";
  } else {
    std::cout << result_line(bits, spec.total_bits(), decoded) << "\n";
  }
  return 0;
}

int run_decode(const SpecOpts& opts, const std::string& bits_text, bool conv,
               const std::string& format) {
  FormatSpec spec = resolve_spec(opts);
  u64 bits = parse_bits(bits_text, spec);
  bool sign;
  u32 exp_field;
  u64 frac_field;
  DecodedValue decoded;
  if (conv) {
    ConvFloat c = ConvFloat::from_bits(spec, bits);
    sign = c.sign;
    exp_field = c.exp_field;
    frac_field = c.frac_field;
    decoded = decode_conv(c);
  } else {
    HubFloat h = HubFloat::from_bits(spec, bits);
    sign = h.sign;
    exp_field = h.exp_field;
    frac_field = h.frac_field;
    decoded = decode_hub(h);
  }
  if (format == "json") {
    std::cout << "{\"bits\":\"" << hex_bits(bits, spec.total_bits())
              << "\",\"class\":\"" << to_string(decoded.cls)
              << "\",\"sign\":" << (sign ? 1 : 0)
              << ",\"exp_field\":" << exp_field
              << ",\"frac_field\":" << frac_field << ",\"value\":\""
              << value_text(decoded) << "\"}\n";
  } else {
    std::cout << "class=" << to_string(decoded.cls) << " sign=" << sign
              << " exp_field=" << exp_field << " frac_field=" << frac_field
              << " value=" << value_text(decoded) << "\n";
  }
  return 0;
}

int run_add(const SpecOpts& opts, const std::string& a_text,
            const std::string& b_text, bool conv, bool flip_b, bool trace,
            const std::string& format) {
  FormatSpec spec = resolve_spec(opts);
  u64 a_bits = parse_bits(a_text, spec);
  u64 b_bits = parse_bits(b_text, spec);
  u64 sign_bit = u64{1} << (spec.total_bits() - 1);
  if (flip_b) b_bits ^= sign_bit;

  if (conv) {
    auto [r, tr] = conv_add(ConvFloat::from_bits(spec, a_bits),
                            ConvFloat::from_bits(spec, b_bits));
    if (format == "json") {
      std::cout << "{\"result\":\"" << hex_bits(r.bits(), spec.total_bits())
                << "\",\"class\":\"" << to_string(r.cls()) << "\",\"value\":\""
                << value_text(decode_conv(r)) << "\"";
      if (trace) std::cout << ",\"trace\":" << to_json(tr);
      std::cout << "}\n";
    } else {
      std::cout << result_line(r.bits(), spec.total_bits(), decode_conv(r))
                << "\n";
      if (trace) std::cout << render_trace_text(tr);
    }
  } else {
    auto [r, tr] = hub_add(HubFloat::from_bits(spec, a_bits),
                           HubFloat::from_bits(spec, b_bits));
    if (format == "json") {
      std::cout << "{\"result\":\"" << hex_bits(r.bits(), spec.total_bits())
                << "\",\"class\":\"" << to_string(r.cls()) << "\",\"value\":\""
                << value_text(decode_hub(r)) << "\"";
      if (trace) std::cout << ",\"trace\":" << to_json(tr);
      std::cout << "}\n";
    } else {
      std::cout << result_line(r.bits(), spec.total_bits(), decode_hub(r))
                << "\n";
      if (trace) std::cout << render_trace_text(tr);
    }
  }
  return 0;
}

int run_verify(const SpecOpts& opts, bool exhaustive, bool random, u64 n,
               u64 seed, const std::string& format) {
  FormatSpec spec = resolve_spec(opts);
  if (exhaustive == random)
    throw std::invalid_argument("verify: pass exactly one of --exhaustive, --random");
  VerifyReport report =
      exhaustive ? exhaustive_verify(spec) : random_verify(spec, n, seed);
  if (format == "json") {
    std::cout << to_json(report) << "\n";
  } else {
    std::cout << "pairs=" << report.pairs_tested
              << " mismatches=" << report.mismatches.size() << "\n";
    if (!report.invariant_violations.empty())
      std::cout << "invariant_violations="
                << report.invariant_violations.size() << "\n";
  }
  return report.passed() ? 0 : 1;
}

int run_compare(const SpecOpts& opts, u64 n, u64 seed,
                const std::string& format) {
  FormatSpec spec = resolve_spec(opts);
  ErrorStats stats = accuracy_compare(spec, n, seed);
  if (format == "json") {
    std::cout << to_json(stats) << "\n";
  } else {
    std::printf(
        "samples=%llu rms_err_hub=%.6f rms_err_conv=%.6f "
        "max_abs_err_in_result_ulps=%.6f half_ulp_violations=%llu\n",
        static_cast<unsigned long long>(stats.samples), stats.rms_err_hub,
        stats.rms_err_conv, stats.max_abs_err_in_result_ulps,
        static_cast<unsigned long long>(stats.half_ulp_violations));
  }
  return stats.half_ulp_violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HUB floating-point arithmetic model and verifier"};
  app.require_subcommand(1);

  int exit_code = 0;
  SpecOpts spec_opts;
  std::string format = "text";
  std::string value, bits_text, a_text, b_text;
  bool conv = false, trace = false, exhaustive = false, random = false;
  u64 n = 100000, seed = 1;

  auto* info = app.add_subcommand("info", "structural format report");
  add_spec_options(info, spec_opts);
  info->callback([&] { exit_code = run_info(spec_opts); });

  auto* encode = app.add_subcommand("encode", "round a decimal value into the format");
  add_spec_options(encode, spec_opts);
  encode->add_option("--value", value, "decimal literal, inf or nan")->required();
  encode->add_flag("--conv", conv, "use the conventional encoding");
  encode->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  encode->callback([&] { exit_code = run_encode(spec_opts, value, conv, format); });

  auto* decode = app.add_subcommand("decode", "decode a packed bit pattern");
  add_spec_options(decode, spec_opts);
  decode->add_option("--bits", bits_text, "hex bit pattern, e.g. 0x3D")->required();
  decode->add_flag("--conv", conv, "use the conventional encoding");
  decode->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  decode->callback([&] { exit_code = run_decode(spec_opts, bits_text, conv, format); });

  auto* add = app.add_subcommand("add", "add two packed values");
  add_spec_options(add, spec_opts);
  add->add_option("--a", a_text, "first operand bits")->required();
  add->add_option("--b", b_text, "second operand bits")->required();
  add->add_flag("--conv", conv, "use the conventional adder");
  add->add_flag("--trace", trace, "print per-stage records");
  add->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  add->callback([&] {
    exit_code = run_add(spec_opts, a_text, b_text, conv, false, trace, format);
  });

  auto* sub = app.add_subcommand("sub", "subtract two packed values");
  add_spec_options(sub, spec_opts);
  sub->add_option("--a", a_text, "first operand bits")->required();
  sub->add_option("--b", b_text, "second operand bits")->required();
  sub->add_flag("--conv", conv, "use the conventional adder");
  sub->add_flag("--trace", trace, "print per-stage records");
  sub->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  sub->callback([&] {
    exit_code = run_add(spec_opts, a_text, b_text, conv, true, trace, format);
  });

  auto* verify = app.add_subcommand("verify", "check both adders against the exact oracle");
  add_spec_options(verify, spec_opts);
  verify->add_flag("--exhaustive", exhaustive, "every ordered encoding pair");
  verify->add_flag("--random", random, "seeded random pairs");
  verify->add_option("--n", n, "random pair count");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->callback([&] {
    exit_code = run_verify(spec_opts, exhaustive, random, n, seed, format);
  });

  auto* compare = app.add_subcommand("compare", "HUB vs conventional rounding error statistics");
  add_spec_options(compare, spec_opts);
  compare->add_option("--n", n, "sample count");
  compare->add_option("--seed", seed, "random seed");
  compare->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  compare->callback([&] { exit_code = run_compare(spec_opts, n, seed, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
