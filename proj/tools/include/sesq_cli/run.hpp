#pragma once

// Command dispatch for the sesq tool, independent of argument parsing.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sesq/numeric.hpp"

namespace sesq::cli {

enum class Command {
  parallel_sum,
  short_part,
  decompose_lebesgue,
  decompose_short,
  infimum,
  extreme_check,
  rn,
  kernel_lebesgue,
  kernel_short,
  kernel_infimum,
  dilate,
  check_theorems,
};

struct CommandInfo {
  Command command;
  std::string_view name;
  std::string_view usage;  // positional inputs
  std::string_view summary;
  int min_inputs;
  int max_inputs;
};

const std::vector<CommandInfo>& commands();
std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

struct JobConfig {
  Command command = Command::parallel_sum;
  std::vector<std::string> inputs;
  std::optional<double> tol_sym;
  std::optional<double> tol_psd;
  std::optional<double> tol_recon;
  std::optional<double> rank_tol;
  std::optional<std::string> output;
  std::optional<std::uint64_t> seed;
  int samples = 50;  // check-theorems ensemble size
  int terms = 3;     // rn sequence length
};

enum ExitCode : int { ok = 0, validation_failed = 1, precondition_failed = 2, internal_error = 3 };

struct RunResult {
  int exit_code = ExitCode::ok;
  std::string document;  // the result document on success, with a trailing newline
  std::string error;     // diagnostic on failure
};

/// Runs one job without touching stdout, stderr or the output file.
RunResult run(const JobConfig& config);

/// run() plus delivery: the document goes to config.output or stdout,
/// diagnostics to stderr. Returns the exit code.
int execute(const JobConfig& config);

}  // namespace sesq::cli
