#pragma once

#include "qsing/errors.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qsing {

/// 2 parse errors, 3 validation errors, 4 missing divisor data, 1 anything else.
int exit_code_for(Errc code);

/// Entry point of the `qsing` command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsing
