#pragma once

#include <ostream>

namespace weylgrowth {

/// Exit codes: 0 success, 1 a check failed, 2 bad input or precondition,
/// 3 the model violates a growth-indicator property, 4 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weylgrowth
