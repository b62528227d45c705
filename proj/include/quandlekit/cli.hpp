#ifndef QUANDLEKIT_CLI_HPP_
#define QUANDLEKIT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace quandlekit::cli {

enum ExitCode : int { kPass = 0, kFailedCheck = 1, kUsageError = 2 };

/// Runs one command line (without the program name). The report goes to
/// `out` as JSON, or as aligned tables with --pretty; diagnostics go to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace quandlekit::cli

#endif  // QUANDLEKIT_CLI_HPP_
