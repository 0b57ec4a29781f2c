#pragma once

#include <ostream>

namespace polystrata::cli {

/// Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
/// 3 invariant failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polystrata::cli
