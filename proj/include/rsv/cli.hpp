#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsv {

/// Exit codes: 0 success/agreement, 1 usage, 2 parse error,
/// 3 property violation (criterion/oracle mismatch), 4 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsv
