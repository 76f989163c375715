#pragma once

#include <iosfwd>

namespace tfc {

/// Entry point of the `tfc` tool. Exit codes: 0 yes/extends/ok, 1 no/fails,
/// 2 usage, parse or validation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tfc
