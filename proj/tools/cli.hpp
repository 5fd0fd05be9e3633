#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace homspace::cli {

enum class OutputFormat { table, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Process state the CLI depends on, injected so tests can fake it.
struct Environment {
  bool stdout_is_tty = false;
  /// Value of HOMSPACE_MAX_RANK, if set.
  std::optional<std::string> max_rank_override;
};

/// Runs one command line (args excludes the program name). Returns 0 on
/// success, 1 if a verification sweep found a failing instance, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env);

}  // namespace homspace::cli
