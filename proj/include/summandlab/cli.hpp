#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace summandlab::cli {

struct CommandResult {
  std::string command;
  std::string status;  // ok | refuted | error
  nlohmann::json payload;
  long timing_ms = 0;
  int exit_code = 2;
};

// Parses and runs one subcommand. Never throws: failures become status=error
// results with a machine-readable code in the payload.
//
// The `kernel` and `verify-splitting` subcommands read a declarative ring-map
// file:
//   source vars: x, y, z
//   source ideal: x*z - y^2
//   target vars: u, v
//   map: x -> u^2; y -> u*v; z -> v^2
// Lines starting with '#' are comments; the ideal entries are optional.
CommandResult dispatch(const std::vector<std::string>& args);

// Serializes the deterministic JSON result to stdout, a human summary (with
// timing) to stderr, and returns the exit code.
int run_main(int argc, char** argv);

}  // namespace summandlab::cli
