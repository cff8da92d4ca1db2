#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace glab::cli {

// Exit codes: 0 success, 1 domain/range/data errors, 2 usage errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Numeric output goes to `out` (or --out),
// diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glab::cli
