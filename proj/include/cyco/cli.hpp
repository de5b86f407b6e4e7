#ifndef CYCO_CLI_HPP
#define CYCO_CLI_HPP

#include <string>
#include <vector>

namespace cyco::cli {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

// Exit codes: 0 success/EQUAL, 1 NOT-PARALLEL or sweep violations,
// 2 input error, 3 resource bound exceeded.
RunResult run(const std::vector<std::string>& args);

}  // namespace cyco::cli

#endif
