#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqcoh::cli {

/// Runs one command. `args` excludes the program name. Exit codes: 0 on
/// success, 2 on invalid arguments, 1 when the computation itself fails; both
/// failures print a JSON error document on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqcoh::cli
