#ifndef PTMC_CLI_HPP
#define PTMC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ptmc::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kTimeout = 3 };

/// Runs one subcommand (verify, construct, search, gamma, export, survey).
/// args excludes the program name. The RunReport JSON goes to `out` and, with
/// --out DIR, to DIR/report.json next to the artifacts; diagnostics go to
/// `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ptmc::cli

#endif // PTMC_CLI_HPP
