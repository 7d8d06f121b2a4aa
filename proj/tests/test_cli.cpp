#include <catch_amalgamated.hpp>

#include <sstream>

#include "jackpos/cli.hpp"

using namespace jackpos;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "jackpos");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("theta of a one-row partition", "[cli]") {
  const auto r = run_cli({"jack", "theta", "--lambda", "2", "--rho", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"vars\":[\"alpha\"],\"terms\":[{\"exp\":[1],\"coef\":\"1\"}]}\n");
  CHECK(r.err.empty());
}

TEST_CASE("rectangle value for a single part 2", "[cli]") {
  const auto r = run_cli({"rect", "theta", "--mu", "2"});
  CHECK(r.code == 0);
  const MPoly f = mpoly_from_json(json::parse(r.out));
  const MPoly p = MPoly::variable("p"), q = MPoly::variable("q");
  CHECK(f == -(p * q * (p - MPoly::variable("alpha") * q + MPoly::variable("beta"))));
  CHECK(run_cli({"rect", "theta", "--mu", "2", "--independent-beta"}).out == r.out);
}

TEST_CASE("identity sweep summary", "[cli]") {
  const auto r = run_cli({"verify", "identities", "--max-n", "3"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["pass"] == j["reports"].size());
  CHECK(j["summary"]["pass"].get<int>() > 0);
  for (const auto& rep : j["reports"]) CHECK_FALSE(rep.contains("runtime_ms"));
}

TEST_CASE("output is deterministic and independent of the worker count", "[cli]") {
  const std::vector<std::string> args{"verify", "identities", "--max-n", "5", "--sample", "200", "--seed", "7"};
  const auto a = run_cli(args), b = run_cli(args);
  CHECK(a.out == b.out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--jobs", "4"});
  CHECK(run_cli(threaded).out == a.out);
  auto other_seed = args;
  other_seed[7] = "8";
  CHECK(run_cli(other_seed).out != a.out);
}

TEST_CASE("timing is opt-in", "[cli]") {
  const auto r = run_cli({"--timing", "verify", "table6"});
  CHECK(r.code == 0);
  for (const auto& rep : json::parse(r.out)["reports"]) CHECK(rep.contains("runtime_ms"));
}

TEST_CASE("global options may follow the subcommand", "[cli]") {
  const auto r = run_cli({"partitions", "list", "--n", "3", "--output", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n2,1\n1,1,1\n");
}

TEST_CASE("partition commands", "[cli]") {
  CHECK(json::parse(run_cli({"partitions", "info", "--lambda", "2,2"}).out)["z"] == "8");
  CHECK(run_cli({"partitions", "modify", "--mu", "3,2", "--move", "down_rs", "--r", "3", "--s", "2"}).out == "[4]\n");
  CHECK(run_cli({"partitions", "modify", "--mu", "3,2", "--move", "Up_rs", "--r", "1", "--s", "2"}).out ==
        "[2,2,1]\n");
  CHECK(run_cli({"partitions", "modify", "--mu", "3", "--move", "down_r", "--r", "2"}).out == "null\n");
  CHECK(run_cli({"partitions", "list", "--n", "4", "--no-ones"}).out == "[[4],[2,2]]\n");
  CHECK(run_cli({"partitions", "dominance", "--a", "2,1,1", "--b", "2,2"}).out == "true\n");
}

TEST_CASE("audits travel with rectangle polynomials", "[cli]") {
  const json j = json::parse(run_cli({"theta", "rect", "--m", "1", "--mu", "3"}).out);
  CHECK(j["audit"]["nonneg"] == true);
  CHECK(j["audit"]["integer"] == true);
  CHECK(j["audit"]["unit"] == true);
  const json closed = json::parse(run_cli({"theta", "rect", "--m", "1", "--mu", "3", "--mode", "closed"}).out);
  CHECK(closed == j);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"jack", "theta", "--lambda", "2"}).code == 2);
  CHECK(run_cli({"jack", "theta", "--lambda", "2", "--rho", "3"}).code == 2);
  CHECK(run_cli({"jack", "theta", "--lambda", "2,x", "--rho", "3"}).code == 2);
  CHECK(run_cli({"theta", "hat", "--lambda", "2,2", "--mu", "2,1"}).code == 2);
  CHECK(run_cli({"jack", "binom", "--lambda", "2", "--mu", "3"}).code == 2);
  CHECK(run_cli({"jack", "pieri", "--lambda", "2,2", "--i", "2"}).code == 2);
  CHECK(run_cli({"verify", "identities", "--checks", "I9"}).code == 2);
  CHECK(run_cli({"--output", "xml", "partitions", "list", "--n", "2"}).code == 2);
  const auto r = run_cli({"--max-weight", "4", "jack", "expand", "--lambda", "5"});
  CHECK(r.code == 2);
  const json e = json::parse(r.err);
  CHECK(e["error"] == "WeightLimitExceeded");
  CHECK(r.out.empty());
  CHECK(jackpos::max_weight() != 4);
}

TEST_CASE("text rendering", "[cli]") {
  CHECK(run_cli({"--output", "text", "jack", "theta", "--lambda", "2", "--rho", "2"}).out == "alpha\n");
  const auto r = run_cli({"--output", "text", "verify", "table6"});
  CHECK(r.out.find("pass=10 fail=0 finding=0") != std::string::npos);
}

TEST_CASE("divisibility beyond the rectangle", "[cli]") {
  const json j = json::parse(run_cli({"rect", "divisibility", "--mu", "3", "--p", "1", "--q", "1"}).out);
  CHECK(j["divisible"] == true);
  CHECK(j.contains("quotient"));
  CHECK(run_cli({"rect", "divisibility", "--mu", "2", "--p", "1", "--q", "2"}).code == 1);
}
