#include "lex/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = lex::run_cli(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
