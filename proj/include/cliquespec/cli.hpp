#pragma once

#include <iosfwd>

namespace cliquespec {

/// Entry point behind the `cliquespec` executable. Exit codes: 0 success,
/// 1 usage or input error, 2 a theorem check found violations.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cliquespec
