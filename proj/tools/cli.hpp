#pragma once

namespace satqubo {

// Entry point behind the satqubo binary; split out so integration tests can
// drive the CLI in-process. Returns the process exit code.
int run_cli(int argc, const char* const* argv);

// Exit codes, one per error class.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidParameter = 3;
inline constexpr int kExitUnsupported = 4;
inline constexpr int kExitParse = 5;
inline constexpr int kExitIo = 6;

}  // namespace satqubo
