#ifndef AGSG_CLI_HPP
#define AGSG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace agsg {

/// Command-line front end. Subcommands: semigroup | verify | code |
/// puregaps. Returns the process exit code: 0 success, 1 verification
/// failure, 2 usage error, 3 resource or cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agsg

#endif
