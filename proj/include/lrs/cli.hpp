#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lrs {

// Runs one subcommand. `args` excludes the program name. Writes a single JSON
// document to `out`; diagnostics go to `err`. Returns 0 on success, 1 on a
// domain error, 2 on a usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lrs
