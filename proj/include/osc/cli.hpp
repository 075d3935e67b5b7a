#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace osc {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2, kUnstabilized = 3 };

struct RunConfig {
  std::string command;
  std::vector<std::string> args;
  std::set<std::int64_t> gaps;
  std::int64_t rank = 1;
  std::int64_t embedding = 1;
  std::int64_t N = 4;
  std::int64_t M = 8;
  std::int64_t W = 8;
  std::int64_t probe_bound = 4;
  std::int64_t threads = 1;
  std::string kind = "A";      // coinv: A or X
  std::string format = "text";  // text or json
  std::string config_path;

  /// Throws std::invalid_argument on inconsistent parameters.
  void validate() const;
};

struct RunResult {
  int exit_code = kOk;
  std::string output;  // stdout
  std::string error;   // stderr
};

/// "1,2, 5" -> {1, 2, 5}; "" -> {}.
std::set<std::int64_t> parse_gap_list(const std::string& text);

/// Dispatches one command. Output is deterministic for identical configs.
RunResult run(const RunConfig& config);

/// Parses argv (flags and an optional key = value config file) and runs.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace osc
