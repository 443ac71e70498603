#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hlineq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Process context the front end depends on, injected so tests can fake it.
struct Environment {
  bool stdout_is_tty = false;
  std::optional<std::string> threads;  ///< value of HLINEQ_THREADS
};

/// Runs one invocation. `args` excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage errors
/// (bad flags, unknown regime, violated hypotheses, exceeded budgets).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env);

}  // namespace hlineq::cli
