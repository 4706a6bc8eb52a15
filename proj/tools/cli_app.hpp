#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solvstab {

/// Entry point of the solvstab tool, separated from main() so the test suite
/// can drive it in-process. Returns the process exit code: 0 on success, 1
/// when `verify` found a failing theorem verdict, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solvstab
