#ifndef GRAPHEX_CLI_HPP
#define GRAPHEX_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace graphex {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2, kExitNumerical = 3 };

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a,b,c" or the doubling range "lo..hi".
std::vector<double> parse_grid(std::string_view text);

}  // namespace graphex

#endif  // GRAPHEX_CLI_HPP
