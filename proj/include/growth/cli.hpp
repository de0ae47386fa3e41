#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace growth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

/// args excludes the program name. Reports go to --out when given, else to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace growth::cli
