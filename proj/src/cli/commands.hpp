#pragma once

#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codec.hpp"

namespace qadm::cli {

struct Invocation {
  std::string subcommand;
  std::function<Json()> action;
  std::vector<std::string> diagnostics;
  int exit_code = 0;  // set by actions that report a failed verification
};

void add_commands(CLI::App& app, Invocation& inv);

}  // namespace qadm::cli
