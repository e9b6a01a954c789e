#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orientk::cli {

enum ExitCode : int {
  kHolds = 0,
  kRefuted = 1,
  kUsage = 2,
  kBudget = 3,
};

/// argv[0] is the program name. The report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, as lowercase hex.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace orientk::cli
