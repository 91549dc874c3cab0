#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abfold {

inline constexpr int kExitOk = 0;
inline constexpr int kExitTargetMissed = 1;
inline constexpr int kExitUsage = 2;

/// Command-line front end. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

} // namespace abfold
