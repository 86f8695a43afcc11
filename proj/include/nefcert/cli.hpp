#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nefcert::cli {

/// Runs the command line `args` (args[0] is the program name). Returns the
/// process exit code: 0 success or CONFIRMED, 2 HYPOTHESIS_NOT_MET,
/// 3 DISCREPANCY, 1 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nefcert::cli
