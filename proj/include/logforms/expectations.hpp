#pragma once

#include <map>
#include <string>

namespace logforms {

/// Reference constant with its tolerance, kept as decimal text.
struct Expectation {
  std::string value;
  std::string tolerance;
  std::string source;

  double as_double() const { return std::stod(value); }
  double tol() const { return std::stod(tolerance); }
};

struct Expectations {
  int version = 0;
  std::map<std::string, Expectation> entries;

  /// Throws std::out_of_range naming the missing id.
  const Expectation& at(const std::string& id) const;
};

/// Reads data/expectations.json (or the given file).
Expectations load_expectations(const std::string& path = LOGFORMS_DATA_DIR "/expectations.json");

}  // namespace logforms
