#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "charvar/report.hpp"

namespace charvar {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// 0 when no report fails, 1 otherwise.
int exit_code_for(const std::vector<VerificationReport>& reports);

/// Runs the command line `args` (args[0] is the program name). Returns 0 when
/// every report passes, 1 on a failing report, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charvar
