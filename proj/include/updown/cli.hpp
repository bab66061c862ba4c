#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace updown::cli {

/// Run the command-line tool on `args` (program name excluded), writing
/// results to `out` and diagnostics to `err`. Returns the process exit code:
///   0  success (verify: the square is magic; equation: identity holds)
///   1  verified square is not magic / equation does not hold
///   2  bad usage, malformed input, or unsupported parameters
///   3  construction search exhausted or goal unattainable
///   4  transform impossible (digits with no rotation / mirror image)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace updown::cli
