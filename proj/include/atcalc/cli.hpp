#pragma once

#include "json.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace atcalc::cli {

inline constexpr std::size_t kDefaultBound = 100000;

/// kDefaultBound, or the value of ATCALC_BOUND when set to a positive integer.
std::size_t default_bound();

/// 0 positive, 1 negative, 2 inconclusive, 3 error; read from report["outcome"].
int exit_code(const nlohmann::json& report);

/// Runs one command (arguments without the program name), writes the JSON
/// report to `out` and diagnostics to `err`, and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atcalc::cli
