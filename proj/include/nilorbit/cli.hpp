#pragma once
// Command-line front end. run() is the whole driver so tests can call it
// with captured streams. Exit codes: 0 success, 1 violated hypothesis
// (bad characteristic, unsupported type, budget), 2 usage errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace nilorbit::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nilorbit::cli
