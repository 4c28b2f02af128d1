#include "lex/report.hpp"

#include <json.hpp>

#include <algorithm>

namespace lex {

void Report::param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
}

void Report::check(std::string name, bool pass, std::string details) {
  checks.push_back({std::move(name), pass, std::move(details)});
}

void Report::table(std::string name, std::string csv) {
  tables.emplace_back(std::move(name), std::move(csv));
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  if (seed) j["seed"] = *seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  j["tables"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : tables) j["tables"][k] = v;
  j["passed"] = passed();
  return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
  std::string out;
  for (const auto& [k, v] : tables) {
    out += "# " + k + "\n";
    out += v;
  }
  return out;
}

} // namespace lex
