#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trileib {

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trileib
