#include "logforms/expectations.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace logforms {

const Expectation& Expectations::at(const std::string& id) const {
  auto it = entries.find(id);
  if (it == entries.end()) throw std::out_of_range("no expectation named '" + id + "'");
  return it->second;
}

Expectations load_expectations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  Expectations out;
  out.version = doc.at("version").get<int>();
  for (const auto& e : doc.at("entries")) {
    std::string id = e.at("id").get<std::string>();
    if (out.entries.count(id)) throw std::runtime_error("duplicate expectation '" + id + "'");
    out.entries[id] = Expectation{e.at("value").get<std::string>(), e.at("tolerance").get<std::string>(),
                                  e.at("source").get<std::string>()};
  }
  return out;
}

}  // namespace logforms
