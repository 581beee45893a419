#pragma once

#include <map>
#include <string>
#include <vector>

namespace binform {

struct CommandRequest {
  std::string command;  // factor | classify | symmetry | hamiltonian | decide | portrait | dynamics
  std::string polynomial;
  // tol, eps, window ("x0,y0,x1,y1"), res, seeds (CSV path), out, format, time
  std::map<std::string, std::string> options;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;  // JSON on success
  std::string err;  // JSON error object on failure
};

const std::vector<std::string>& command_names();

/// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
CommandResult run(const CommandRequest& req);

}  // namespace binform
