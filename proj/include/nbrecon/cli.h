#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nbrecon {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitAmbiguous = 2;
inline constexpr int kExitInfeasible = 3;

// Runs one command line (without the program name). Paths of "-" read from
// `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace nbrecon
