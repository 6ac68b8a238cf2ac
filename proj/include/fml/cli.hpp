#pragma once

#include <string>
#include <vector>

namespace fml {

// Runs the command line front end. Exit codes: 0 success/feasible,
// 1 infeasible or runtime failure, 2 usage error, 3 parse error.
int cli_run(const std::vector<std::string>& args);
int cli_run(int argc, char** argv);

}  // namespace fml
