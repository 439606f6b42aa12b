#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jwds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitInvalid = 2;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Expands `--lambda` arguments: plain numbers or `start:stop:step` sweeps.
std::vector<double> parse_lambdas(const std::vector<std::string>& items);

}  // namespace jwds::cli
