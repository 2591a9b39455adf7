#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "steinhaus/residue.hpp"

namespace steinhaus::cli {

/// Environment variable holding the default --max-states budget.
inline constexpr const char* kMaxStatesEnv = "STEINHAUS_MAX_STATES";

/// One line per row, each row shifted half a cell right of the one above so
/// the entries sit centered like the usual drawing of a Steinhaus triangle.
std::string render_triangle(const Triangle& t);

/// Runs one subcommand. args excludes the program name.
/// Exit codes: 0 success, 1 usage error, 2 domain error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace steinhaus::cli
