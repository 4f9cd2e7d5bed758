#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli_core.hpp"

using namespace logforms::cli;

namespace {

// Command-line values win over the config file, which wins over defaults.
void merge(RunConfig& cfg, const std::map<std::string, std::string>& file, const std::map<std::string, std::string>& flags) {
  std::map<std::string, std::string> all = file;
  for (const auto& [k, v] : flags) all[k] = v;
  for (const auto& [k, v] : all) {
    if (k == "precision") {
      try {
        cfg.precision = std::stol(v);
      } catch (const std::exception&) {
        throw UsageError("precision: expected an integer");
      }
    } else if (k == "format") {
      cfg.format = v;
    } else if (k == "seed") {
      try {
        cfg.seed = std::stoull(v);
      } catch (const std::exception&) {
        throw UsageError("seed: expected a non-negative integer");
      }
    } else if (k == "n") {
      cfg.n = parse_range(v);
    } else {
      cfg.options[k] = v;
    }
  }
  cfg.validate();
}

std::string positional(const RunConfig& cfg, const std::string& given, const std::string& key) {
  if (!given.empty()) return given;
  auto it = cfg.options.find(key);
  if (it == cfg.options.end()) throw UsageError("missing " + key);
  return it->second;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear forms in logarithms: exact coefficients, denominators and irrationality-measure bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::map<std::string, std::string> flags;
  std::string config_path;
  auto global = [&](const std::string& name, const std::string& help) {
    app.add_option_function<std::string>("--" + name, [&flags, name](const std::string& v) { flags[name] = v; }, help);
  };
  global("precision", "decimal digits (default 30, at least 20)");
  global("n", "n or lo..hi");
  global("format", "human, json or csv");
  global("seed", "seed for randomized suites");
  app.add_option("--config", config_path, "key=value file; command-line flags take precedence");

  auto local = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_option_function<std::string>("--" + name, [&flags, name](const std::string& v) { flags[name] = v; }, help);
  };

  std::string target, family, suite, kind;
  auto* bound = app.add_subcommand("bound", "irrationality-measure bound for a named target");
  bound->add_option("target", target, "log2-rukhadze, log2-simple, pi-hata, log2log3-hu, log3-rhin");
  auto* forms = app.add_subcommand("forms", "exact linear forms of a family over a range of n");
  forms->add_option("family", family, "rukhadze, simple, hata, hu, rhin, rhin-simple");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "inclusions, symmetry, oracle, denominators, profiles");
  local(verify, "count", "number of random cases");
  auto* search = app.add_subcommand("search", "exhaustive search for the best small polynomial on a segment");
  local(search, "degree", "maximal degree (1..8, default 7)");
  local(search, "coeff-bound", "coefficient box (default 10)");
  local(search, "segment", "lo,hi[;lo,hi...] with rational ends");
  auto* oracle = app.add_subcommand("oracle", "independent hypergeometric evaluations");
  oracle->add_option("kind", kind, "ramanujan, 2f1, euler, f1");
  local(oracle, "series", "39 or 44");
  local(oracle, "terms", "number of series terms");
  local(oracle, "params", "comma separated parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    merge(cfg, config_path.empty() ? std::map<std::string, std::string>{} : load_config(config_path), flags);
    CommandResult r;
    if (bound->parsed()) r = cmd_bound(positional(cfg, target, "target"), cfg);
    else if (forms->parsed()) r = cmd_forms(positional(cfg, family, "family"), cfg);
    else if (verify->parsed()) r = cmd_verify(positional(cfg, suite, "suite"), cfg);
    else if (search->parsed()) r = cmd_search(cfg);
    else r = cmd_oracle(positional(cfg, kind, "kind"), cfg);
    std::cout << render(r.doc, cfg.format);
    return r.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
