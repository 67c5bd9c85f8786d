#ifndef BANDSPEC_CLI_HPP
#define BANDSPEC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bandspec {

/// Front-end shared by the binary and the tests. args holds argv[1..] in
/// command-line order. Exit codes: 0 success or verification pass, 1
/// verification failure, 2 usage, parse, or evaluation error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bandspec

#endif  // BANDSPEC_CLI_HPP
