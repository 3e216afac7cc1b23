#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spectra/json_io.hpp"

namespace spectra {

enum class Command { analyze_fibration, spectral_check, higgs_classify, hitchin_dim, symkernel_verify, sweep };
std::string to_string(Command c);

enum class OutputFormat { json, text };

struct IntRange {
  int lo = 0;
  int hi = -1;  // empty when hi < lo
};

struct RunConfig {
  Command command = Command::hitchin_dim;
  std::string model_path;
  std::string bundle_path;
  std::string spectral_path;
  std::string fiber_type;  // "atiyah", "split_pair", "distinct"
  int g = 0;
  int r = 2;
  std::string f_expr;
  std::string g_expr;
  int samples = 20;
  std::uint64_t seed = 0;
  int trials = 16;
  bool general_position = true;
  OutputFormat output = OutputFormat::json;
  IntRange sweep_r, sweep_d, sweep_e, sweep_g;
};

struct RunResult {
  int exit_code = 0;
  Json report;
  /// Rendered report in the requested format, newline terminated.
  std::string rendered;
};

/// Dispatches one command. Never throws: errors map to exit codes
/// 1 (malformed input or domain error), 2 (hypothesis violation),
/// 3 (falsification).
RunResult run(const RunConfig& config);

/// Explicit seed, else SPECTRA_SEED, else 0.
std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed);

/// Parses "a..b" or "a"; ParseError otherwise.
IntRange parse_range(const std::string& text);

}  // namespace spectra
