#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stabbounds {

// Exit codes: 0 success, 1 reference mismatch or failed verification,
// 2 usage error, 3 input file/validation error, 4 infeasible measurement
// data, 5 internal limit or numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabbounds
