#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace findet {

// Exit codes: 0 = verdict computed (including Inconclusive), 1 = input
// error, 2 = internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace findet
