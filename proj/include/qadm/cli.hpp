#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qadm::cli {

inline constexpr const char* kVersion = "0.1.0";

struct Route {
  std::string subcommand;
  std::vector<std::string> operations;
};

// Which subcommand exposes each library operation.
const std::vector<Route>& routing_table();
// Subcommands actually registered with the argument parser.
std::vector<std::string> registered_subcommands();

// args excludes the program name. Writes one JSON document to `out`.
// Exit codes: 0 success, 1 domain error, 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out);
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace qadm::cli
