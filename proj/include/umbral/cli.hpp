#pragma once

#include <iosfwd>

namespace umbral::cli {

/// Full command-line front end. Returns the process exit code:
///   0 success, 1 usage/parse error, 2 mathematical precondition failure,
///   3 verification suite with a failed identity.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace umbral::cli
