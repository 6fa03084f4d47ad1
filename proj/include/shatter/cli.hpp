#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace shatter::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Runs one command line. `args` excludes the program name; "-" paths refer
/// to `in` and `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// SHATTER_WORKERS when set and valid, otherwise the hardware concurrency.
std::size_t default_workers();

}  // namespace shatter::cli
