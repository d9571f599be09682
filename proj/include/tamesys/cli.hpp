#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tamesys {

/// Run one CLI invocation. Exit status: 0 on success, 1 when a mathematical
/// invariant check fails (the CI hook), 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tamesys
