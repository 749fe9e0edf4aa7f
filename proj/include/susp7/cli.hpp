#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace susp7::cli {

// Exit codes: 0 success, 1 parse/validation error, 2 the input needs the
// double suspension, 3 verification or corpus failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace susp7::cli
