#ifndef TCYC_CLI_HPP
#define TCYC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tcyc::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs one subcommand. `args` excludes the program name. Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace tcyc::cli

#endif  // TCYC_CLI_HPP
