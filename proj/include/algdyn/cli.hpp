#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace algdyn {

// Dispatches one subcommand (args without the program name).  Returns 0 on
// success, 1 on a negative analysis verdict (surjunctivity counterexample,
// sigma non-injective, certification request with no certificate), 2 on
// unusable input.  Reports go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algdyn
