#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace codim {

// Command-line dispatcher. Exit codes: 0 success, 1 domain error (e.g. a
// co-graph that is not strongly connected), 2 usage or parse error. All
// output is line-oriented and deterministic.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace codim
