#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsring {

// Exit codes: 0 ok, 1 verification mismatch, 2 invalid input,
// 3 method inapplicable, 4 size cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace nsring
