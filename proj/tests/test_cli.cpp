#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "cli_core.hpp"
#include "support/oracles.hpp"

using namespace logforms;
using namespace logforms::cli;

namespace {

struct Run {
  std::string out;
  int code;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LOGFORMS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

}  // namespace

TEST_CASE("config files: keys, comments, rejection") {
  auto m = parse_config("# run\nprecision = 40\n\nformat=json  # trailing\nn=3..9\n");
  CHECK(m.size() == 3);
  CHECK(m.at("precision") == "40");
  CHECK(m.at("format") == "json");
  CHECK(parse_range(m.at("n")) == std::make_pair(3L, 9L));
  CHECK(parse_range("7") == std::make_pair(7L, 7L));
  CHECK_THROWS_AS(parse_config("precison=40\n"), UsageError);
  CHECK_THROWS_AS(parse_config("precision 40\n"), UsageError);
  CHECK_THROWS_AS(parse_range("3..x"), UsageError);

  RunConfig cfg;
  cfg.precision = 19;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg.precision = 30;
  cfg.format = "xml";
  CHECK_THROWS_AS(cfg.validate(), UsageError);
}

TEST_CASE("bound json round-trips") {
  RunConfig cfg;
  cfg.precision = 40;
  for (const auto& target : {"log2-simple", "log2-rukhadze", "log3-rhin"}) {
    Json j = cmd_bound(target, cfg).doc;
    NamedBound back = bound_from_json(j, Precision(50));
    CHECK(bound_to_json(back, 40) == j);
    CHECK(std::stod(j.at("mu").get<std::string>()) > 1);
  }
}

TEST_CASE("renderers agree on content") {
  RunConfig cfg;
  cfg.n = std::make_pair(1L, 3L);
  Json doc = cmd_forms("simple", cfg).doc;
  REQUIRE(doc.at("rows").size() == 3);
  std::string csv = render(doc, "csv");
  CHECK(csv.rfind("n,target,log_coeff,const_coeff", 0) == 0);
  CHECK(csv.find("\n1,2,3,-2,") != std::string::npos);   // 3 log 2 - 2
  CHECK(Json::parse(render(doc, "json")) == doc);
  CHECK(render(doc, "human").find("log_coeff=3") != std::string::npos);
}

TEST_CASE("random Gauss rows carry integral scaled coefficients") {
  oracle::Gen g(11);
  for (int trial = 0; trial < 5; ++trial) {
    RunConfig cfg;
    long n = g.uniform(1, 12);
    cfg.n = std::make_pair(n, n);
    Json rows = cmd_forms(g.pick(std::vector<std::string>{"rukhadze", "simple", "rhin-simple"}), cfg).doc.at("rows");
    for (const auto& r : rows) CHECK(r.at("integral").get<bool>());
  }
}

TEST_CASE("verify suites report failures through the exit code") {
  RunConfig cfg;
  cfg.options["count"] = "10";
  auto r = cmd_verify("symmetry", cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.doc.at("cases") == 10);
  CHECK(cmd_verify("profiles", cfg).exit_code == 0);
  CHECK_THROWS_AS(cmd_verify("nothing", cfg), UsageError);
}

TEST_CASE("binary: same seed gives identical output") {
  const std::string args = "verify inclusions --count 15 --n 20 --seed 5 --format json";
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
  Run s1 = run("search --degree 5 --coeff-bound 6 --format json"), s2 = run("search --degree 5 --coeff-bound 6 --format json");
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("binary: exit codes") {
  CHECK(run("bound log2-simple").code == 0);
  CHECK(run("bound unknown-target").code == 2);
  CHECK(run("--precision 10 bound log2-simple").code == 2);
  CHECK(run("--bogus-flag bound log2-simple").code == 2);
  CHECK(run("oracle f1 --params 1,2").code == 2);
  CHECK(run("--config /nonexistent/file bound log2-simple").code == 2);
}
