#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hermdiag::cli {

/// Exit codes: 0 every check passed, 1 some check failed, 2 bad invocation
/// or runtime error (reported as one JSON object on `err`).
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kError = 2 };

/// Default upper bound on --kmax; HERMDIAG_KMAX_CAP overrides it.
inline constexpr std::size_t kDefaultKmaxCap = 1000;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermdiag::cli
