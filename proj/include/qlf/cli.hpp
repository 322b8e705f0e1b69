#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

/// Parses argv (argv[0] is the program name), runs one subcommand and writes
/// the report to `out` unless --out names a file. Diagnostics go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlf::cli
