#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "weylnorm/cli.hpp"
#include "weylnorm/errors.hpp"

using namespace weylnorm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "weylnorm");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("roots") {
  auto a2 = run({"roots", "--type", "A", "--rank", "2", "--json"});
  CHECK(a2.code == kExitPass);
  auto j = nlohmann::json::parse(a2.out);
  CHECK(j["num_roots"] == 6);
  CHECK(j["weyl_order"] == 6);
  CHECK(j["schema_version"] == 1);
  j = nlohmann::json::parse(run({"roots", "--type", "G", "--rank", "2", "--json"}).out);
  CHECK(j["num_roots"] == 12);
  CHECK(j["weyl_order"] == 12);
  auto a1 = run({"roots", "--type", "A", "--rank", "1"});
  CHECK(a1.out.find("2 roots, |W| = 2") != std::string::npos);
}

TEST_CASE("verify") {
  const auto g2 = run({"verify", "--type", "G", "--rank", "2", "--rep", "adjoint", "--json"});
  CHECK(g2.code == kExitPass);
  const auto j = nlohmann::json::parse(g2.out);
  CHECK(j["failed"] == 0);
  CHECK(j["passed"].get<int>() > 100);
  const auto sl2 = run({"verify", "--type", "A", "--rank", "1", "--rep", "sl2"});
  CHECK(sl2.code == kExitPass);
  const auto bad = run({"verify", "--type", "Z", "--rank", "9"});
  CHECK(bad.code == kExitConfigError);
  CHECK(bad.err.find("--type") != std::string::npos);
}

TEST_CASE("configuration errors name the flag") {
  CHECK(run({"verify", "--type", "B", "--rank", "2", "--rep", "defining"}).err.find("--rep") != std::string::npos);
  CHECK(run({"verify", "--type", "A", "--rank", "0"}).code == kExitConfigError);
  CHECK(run({"verify", "--type", "A", "--rank", "2", "--threads", "0"}).err.find("--threads") != std::string::npos);
  CHECK(run({"adjoint-table", "--type", "A", "--rank", "2", "--lift", "x"}).err.find("--lift") != std::string::npos);
  CHECK(run({"frobnicate"}).code == kExitConfigError);
  CHECK(run({"verify", "--rank", "2"}).code == kExitConfigError);
  RunConfig cfg;
  cfg.type_label = "A";
  cfg.rank = 2;
  cfg.rep = "sl2";
  CHECK_THROWS_AS(validate(cfg), ConfigError);
}

TEST_CASE("split-check") {
  auto g2 = run({"split-check", "--type", "G", "--rank", "2", "--json"});
  CHECK(g2.code == kExitPass);
  CHECK(nlohmann::json::parse(g2.out)["status"] == "split_with_witness");
  auto sl2 = run({"split-check", "--type", "A", "--rank", "1", "--rep", "sl2", "--json"});
  CHECK(sl2.code == kExitPass);
  CHECK(nlohmann::json::parse(sl2.out)["status"] == "no_two_torsion_section");
  auto e8 = run({"split-check", "--type", "E", "--rank", "8", "--cap", "1000"});
  CHECK(e8.code == kExitCapExceeded);
}

TEST_CASE("enumerate and tables") {
  auto sl2 = run({"enumerate", "--type", "A", "--rank", "1", "--rep", "sl2", "--json"});
  CHECK(sl2.code == kExitPass);
  CHECK(nlohmann::json::parse(sl2.out)["order"] == 4);
  auto capped = run({"enumerate", "--type", "B", "--rank", "3", "--cap", "5"});
  CHECK(capped.code == kExitCapExceeded);
  CHECK(run({"adjoint-table", "--type", "B", "--rank", "2", "--lift", "unitary"}).code == kExitPass);
  CHECK(run({"adjoint-table", "--type", "G", "--rank", "2", "--tilde"}).code == kExitPass);
  CHECK(run({"rep-dump", "--type", "C", "--rank", "2", "--rep", "defining"}).code == kExitPass);
}

TEST_CASE("json output is byte-identical across runs and thread counts") {
  const std::vector<std::vector<std::string>> commands{
      {"roots", "--type", "F", "--rank", "4"},
      {"rep-dump", "--type", "A", "--rank", "2", "--rep", "defining"},
      {"tits-verify", "--type", "B", "--rank", "3"},
      {"u-verify", "--type", "G", "--rank", "2"},
      {"adjoint-table", "--type", "B", "--rank", "2", "--lift", "unitary", "--matrices"},
      {"enumerate", "--type", "A", "--rank", "2", "--lift", "unitary"},
      {"split-check", "--type", "B", "--rank", "3"},
      {"verify", "--type", "A", "--rank", "3"},
  };
  for (auto cmd : commands) {
    cmd.push_back("--json");
    CAPTURE(cmd[0]);
    auto one = cmd;
    one.insert(one.end(), {"--threads", "1"});
    auto many = cmd;
    many.insert(many.end(), {"--threads", "4"});
    const auto a = run(one);
    CHECK(a.out == run(one).out);
    CHECK(a.out == run(many).out);
    CHECK(nlohmann::json::parse(a.out)["schema_version"] == 1);
  }
}
