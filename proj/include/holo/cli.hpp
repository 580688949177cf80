#pragma once

#include <ostream>

namespace holo {

/// Entry point of the holortho command line tool. Never throws; returns the
/// process exit code (0 ok, 2 parse error, 3 geometry or precondition error,
/// 4 numeric non-convergence, 5 suite failure).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holo
