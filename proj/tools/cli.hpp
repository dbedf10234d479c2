#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subcubic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInterrupted = 130;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Async-signal-safe; long-running commands stop at the next graph and write
// a manifest marked partial.
void request_interrupt() noexcept;
void clear_interrupt() noexcept;

}  // namespace subcubic::cli
