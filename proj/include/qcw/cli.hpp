#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcw {

// Entry point shared by the binary and the in-process tests. args excludes
// the program name. Exit code: 0 success / verification pass, 1
// verification failure (or search without a find), 2 input or usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qcw
