#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bandgrowth {

/// Runs the command line: subcommands growth | verify-lemma | oracle |
/// pipeline. Exit status: 0 all checks pass, 1 a verification failed,
/// 2 config error, 3 precondition error, 4 algebraic validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bandgrowth
