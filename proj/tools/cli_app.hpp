#pragma once

#include <ostream>

namespace dipolewave::cli {

/// Exit codes: 0 success, 2 usage or domain error, 3 numeric failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dipolewave::cli
