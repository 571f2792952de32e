#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ohg {

// Command dispatch behind the `ohg` binary; exposed so tests can drive every
// subcommand in-process. Exit codes: 0 success, 1 axiom violation or
// inequality found, 2 input error, 3 cap exceeded.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ohg
