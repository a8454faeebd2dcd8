#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qalcove/cli.hpp"

using qalcove::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify-px prints the graded decomposition") {
  const auto r = invoke({"verify-px", "--type", "A", "--rank", "1", "--weight", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("X = χ_{2ϖ1} + qχ_0") != std::string::npos);
}

TEST_CASE("chain emits JSON") {
  const auto r = invoke({"chain", "--type", "A", "--rank", "2", "--weight", "1,0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["entries"].size() == 2);
  CHECK(j["length"] == 2);
}

TEST_CASE("perfect") {
  auto r = invoke({"perfect", "--type", "G", "--rank", "2", "--node", "long"});
  CHECK(r.code == 0);
  CHECK(r.out.find("perfect, level 1") != std::string::npos);
  CHECK(r.out.find("not perfect") == std::string::npos);
  r = invoke({"perfect", "--type", "C", "--rank", "2", "--node", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("not perfect, level 1") != std::string::npos);
}

TEST_CASE("every subcommand runs on a small case") {
  for (const std::string cmd : {"chain", "admissible", "qls", "crystal", "character", "verify-px", "verify-crystal", "roots", "qbg"}) {
    CAPTURE(cmd);
    CHECK(invoke({cmd, "--type", "B", "--rank", "2", "--weight", "1,1"}).code == 0);
  }
  CHECK(invoke({"perfect", "--type", "B", "--rank", "2"}).code == 0);
  const auto dot = invoke({"crystal", "--type", "A", "--rank", "2", "--weight", "1,0", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({"chain", "--type", "Q", "--rank", "2", "--weight", "1,0"}).code == 2);
  CHECK(invoke({"chain", "--type", "A", "--rank", "2", "--weight", "1"}).code == 2);
  CHECK(invoke({"chain", "--type", "A", "--rank", "2", "--weight", "1,x"}).code == 2);
  CHECK(invoke({"chain", "--type", "A", "--rank", "2", "--weight", "-1,0"}).code == 2);
  CHECK(invoke({"chain", "--type", "E", "--rank", "8", "--weight", "1,0,0,0,0,0,0,0"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"perfect", "--type", "A", "--rank", "2", "--node", "7"}).code == 2);
  const auto big = invoke({"admissible", "--type", "A", "--rank", "3", "--weight", "50,50,50", "--budget", "1000"});
  CHECK(big.code == 2);
  CHECK(big.err.find("budget") != std::string::npos);
}

TEST_CASE("identical inputs give byte-identical JSON") {
  for (const std::string cmd : {"admissible", "qls", "crystal", "character"}) {
    const std::vector<std::string> args{cmd, "--type", "C", "--rank", "2", "--weight", "1,1"};
    auto jobs = args;
    jobs.insert(jobs.end(), {"--jobs", "3"});
    const auto a = invoke(args), b = invoke(args), c = invoke(jobs);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}

TEST_CASE("user chains and config files") {
  const auto chain = invoke({"chain", "--type", "A", "--rank", "2", "--weight", "1,1", "--node-order", "2,1"});
  REQUIRE(chain.code == 0);
  const auto file = temp_file("qalcove_test_chain.json", chain.out);
  const auto lex = invoke({"character", "--type", "A", "--rank", "2", "--weight", "1,1"});
  const auto user = invoke({"character", "--type", "A", "--rank", "2", "--weight", "1,1", "--chain-file", file.string()});
  CHECK(user.code == 0);
  CHECK(nlohmann::json::parse(user.out)["terms"] == nlohmann::json::parse(lex.out)["terms"]);

  const auto bad = temp_file("qalcove_test_bad_chain.json", R"([{"root": [1, 0], "level": 0}])");
  CHECK(invoke({"character", "--type", "A", "--rank", "2", "--weight", "1,1", "--chain-file", bad.string()}).code == 2);

  const auto cfg = temp_file("qalcove_test.toml", "type = \"A\"\nrank = 1\nweight = \"2\"\n");
  const auto viaconfig = invoke({"verify-px", "--config", cfg.string()});
  CHECK(viaconfig.code == 0);
  CHECK(viaconfig.out.find("qχ_0") != std::string::npos);
  const auto unknown = temp_file("qalcove_test_unknown.toml", "type = \"A\"\ncolour = 3\n");
  CHECK(invoke({"verify-px", "--config", unknown.string()}).code == 2);
}

}
