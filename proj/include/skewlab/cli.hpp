#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewlab::cli {

constexpr int exit_ok = 0;
constexpr int exit_domain_error = 1;
constexpr int exit_usage = 2;

/// Runs the command line; args[0] is the program name. Domain errors are
/// written to `err` as {"error": name, "message": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// SKEWLAB_MAX_CELLS, default 12.
int max_cells();

} // namespace skewlab::cli
