#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "logforms/bounds.hpp"

namespace logforms::cli {

using Json = nlohmann::ordered_json;

/// Bad flags, bad config files, unknown names. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  long precision = 30;
  std::string format = "human";
  std::uint64_t seed = 1;
  std::optional<std::pair<long, long>> n;
  std::map<std::string, std::string> options;   // command-specific keys

  void validate() const;
};

/// Keys a config file may set.
bool is_config_key(const std::string& key);

/// key=value lines, '#' starts a comment, blank lines ignored.
std::map<std::string, std::string> parse_config(const std::string& text);
std::map<std::string, std::string> load_config(const std::string& path);

/// "7" or "3..9".
std::pair<long, long> parse_range(const std::string& text);

struct CommandResult {
  Json doc;
  int exit_code = 0;
};

CommandResult cmd_bound(const std::string& target, const RunConfig& cfg);
CommandResult cmd_forms(const std::string& family, const RunConfig& cfg);
CommandResult cmd_verify(const std::string& suite, const RunConfig& cfg);
CommandResult cmd_search(const RunConfig& cfg);
CommandResult cmd_oracle(const std::string& kind, const RunConfig& cfg);

Json bound_to_json(const NamedBound& b, long digits);
NamedBound bound_from_json(const Json& j, Precision p);

/// human: indented key: value lines; csv: the "rows" table when present, key,value pairs otherwise.
std::string render(const Json& doc, const std::string& format);

}  // namespace logforms::cli
