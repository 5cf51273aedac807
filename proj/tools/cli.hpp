#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace majority::cli {

/// Runs one command line (arguments after the program name). Exit codes:
/// 0 success, 1 usage error, 2 invalid input, 3 I/O failure, 4 replay mismatch.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace majority::cli
