#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace contlab {

// Batch front end. Exit codes: 0 verified/complete, 1 refuted or bounded
// refutation established (or an expectation missed), 2 usage error,
// 3 budget exceeded.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace contlab
