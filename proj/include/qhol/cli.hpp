#ifndef QHOL_CLI_HPP
#define QHOL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qhol {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitSuiteFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `qhol` invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhol

#endif
