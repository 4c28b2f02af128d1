// cli.hpp -- the `lex` command surface.
//
//   enumerate | count | entropy | glue-aws | hp-inequality | repair-aspec |
//   alpha | entropy-bound | codes {build,verify,separate,repair-example} |
//   measures | verify all
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
// or input errors.

#pragma once

#include "lex/report.hpp"

#include <string>
#include <vector>

namespace lex {

struct CliResult {
  int exit_code = 0;
  std::string out; // document written to stdout (empty when --out was used)
  std::string err;
  Report report;
};

/// `args` excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace lex
