#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lotto {

enum class Mode { kPayoff, kCommit2p, kSplit, kCommit3p, kRegion2p, kRegion3p,
                  kVerify };
enum class OutputFormat { kCsv, kJson, kSvg };

inline constexpr std::uint64_t kDefaultSeed = 20200917;

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitVerification = 3;

// Environment variable naming a default config file.
inline constexpr const char* kConfigEnv = "LOTTO_CONFIG";

struct SweepConfig {
  Mode mode = Mode::kPayoff;
  // theorem1, theorem2 or oracle for Mode::kVerify.
  std::string verify_target;
  // Keyed by flag name without dashes: xa, xb, x1, x2, phi, phi1, phi2, vb, t,
  // resolution, seed, delta.
  std::map<std::string, double> params;
  std::optional<std::string> out;
  std::optional<OutputFormat> format;
};

// Raised for missing or malformed parameters; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string payload;  // CSV, JSON or SVG text
};

// Executes one mode. Never writes files; UsageError and std::domain_error
// propagate to the caller.
RunResult run(const SweepConfig& config);

// Full command-line entry point: parses argv (flags, optional --config file
// or the file named by LOTTO_CONFIG, flags taking precedence), runs, writes
// the payload to --out or `out`, and maps errors to exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace lotto
