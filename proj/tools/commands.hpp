#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phasestar/phasestar.hpp"

namespace phasestar::cli {

enum class Format { TEXT, JSON };

/// Outcome of one command. `payload` goes to stdout, `diagnostics` to stderr.
struct CommandResult {
  enum class Status { OK, ERROR };

  Status status = Status::OK;
  std::string payload;
  std::vector<std::string> diagnostics;
  /// 0 = ok, 1 = domain or parse error, 2 = verification failure.
  int exit_code = 0;

  static CommandResult failure(std::string diagnostic, int code = 1);
};

CommandResult cmd_quantize(const std::string& expr, const std::string& s, Format format);
CommandResult cmd_dequantize(const std::string& expr, const std::string& s, Format format);
CommandResult cmd_star(const std::string& f, const std::string& g, const std::string& s, bool hatted, Format format);

enum class BracketKind { POISSON, STAR, DEFORMED };
CommandResult cmd_bracket(BracketKind kind, const std::string& f, const std::string& g, const std::string& s,
                          const std::string& hbar, Format format);

struct WignerOptions {
  std::string state;
  std::string s = "0";
  std::string grid;  // empty: the default 81×81 grid over [−4, 4]²
  std::size_t dim = 60;
  std::string out;   // empty: CSV on stdout
  Format format = Format::TEXT;
};
CommandResult cmd_wigner(const WignerOptions& options);

/// Suite names accepted by cmd_verify, in display order.
const std::vector<std::string>& verify_suites();

struct VerifyOptions {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t dim = 60;
  std::string grid;
  Format format = Format::TEXT;
};
CommandResult cmd_verify(const VerifyOptions& options);

}  // namespace phasestar::cli
