#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cideal::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInvalid = 2,
  kCapExceeded = 3,
  kCheckFailed = 4,
};

/// Entry point of the `cideal` tool; `args` excludes the program name.
/// JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cideal::cli
