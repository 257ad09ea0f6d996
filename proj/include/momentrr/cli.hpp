#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace momentrr {

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a validation failure,
/// 2 on a mathematical error and 3 on an I/O, schema or usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace momentrr
