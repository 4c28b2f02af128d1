// report.hpp -- machine-readable verification reports.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lex {

struct Check {
  std::string name;
  bool pass;
  std::string details;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> tables; // name -> CSV payload
  std::optional<std::uint64_t> seed;

  void param(std::string key, std::string value);
  void check(std::string name, bool pass, std::string details = {});
  void table(std::string name, std::string csv);

  bool passed() const;
  std::size_t failures() const;

  /// Single JSON document; key order is fixed so identical runs give
  /// byte-identical output.
  std::string to_json() const;
  /// All tables, each preceded by a "# name" line.
  std::string to_csv() const;
};

} // namespace lex
