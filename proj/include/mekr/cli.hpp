#pragma once

#include <string>
#include <vector>

namespace mekr {

/// Parse and execute one CLI invocation (arguments without the program
/// name).  Returns the process exit code:
///   0 success / verdict matches,
///   2 invalid input or an enumeration budget refusal,
///   3 a verdict discrepancy (results are still printed),
///   4 compress input that is not cross-t-intersecting.
int run_cli(const std::vector<std::string>& args);

}  // namespace mekr
