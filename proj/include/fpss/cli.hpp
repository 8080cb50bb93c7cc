#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpss/fp_linalg.hpp"

namespace fpss {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command;  // verify | tables | poincare
  std::string target;
  Residue p = 5;
  std::int64_t lo = 0, hi = -1;
  bool window_given = false;
  std::string page = "inf";
  std::int64_t n = 1;
  bool structured = false;
  std::optional<std::int64_t> band;
};

struct CliResult {
  std::string id;
  std::string status;  // PASS | FAIL | OK
  nlohmann::ordered_json details;
  bool conditional = false;
};

// Thrown for unknown ids, invalid primes and malformed windows; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical target ids behind a verify id, resolving numbered aliases.
std::vector<std::string> resolve_verify_target(const std::string& id, std::int64_t n);
const std::vector<std::pair<std::string, std::string>>& numbered_aliases();

std::vector<CliResult> cmd_verify(const RunConfig& cfg);
std::vector<CliResult> cmd_tables(const RunConfig& cfg);
std::vector<CliResult> cmd_poincare(const RunConfig& cfg);

// Parses argv (without the program name), runs the command and writes the report. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpss
