#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace l1plan::cli {

/// Exit codes: 0 success, 2 infeasible / unreachable / failed verification,
/// 1 bad input or exhausted search budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace l1plan::cli
