#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphdirac {

/// Command-line dispatch; args exclude the program name. Returns 0 on
/// success, 1 on domain errors, 2 on usage errors. All output is
/// deterministic for fixed inputs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace graphdirac
