#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "coinsys/cli.hpp"

using namespace coinsys;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pay") {
  auto r = run({"pay", "-c", "1,3,4", "-v", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "greedy (2,0,1) total 3\noptimal (0,2,0) total 2\ncounterexample true\n");
}

TEST_CASE("check") {
  auto r = run({"check", "-c", "1,2,4,5,8"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["canonical"] == true);
  CHECK(j["min_counterexample"].is_null());
  CHECK(j["method"] == "brute_force");
  CHECK(j["pm_class"] == "+++-+");
  CHECK(j["system"] == nlohmann::json({1, 2, 4, 5, 8}));

  auto p = run({"check", "-c", "1,3,4", "--method", "pearson"});
  REQUIRE(p.code == 0);
  auto pj = nlohmann::json::parse(p.out);
  CHECK(pj["canonical"] == false);
  CHECK(pj["min_counterexample"] == 6);
  CHECK(pj["method"] == "pearson");
}

TEST_CASE("classify and characterize") {
  CHECK(run({"classify", "-c", "1,2,4,5,8"}).out == "+++-+\n");
  auto r = run({"characterize", "-c", "1,3,4"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rule"] == "n3.ineq");
  CHECK(j["canonical"] == false);
  CHECK(j["method"] == "closed_form");
  CHECK(j["parameters"]["q"] == 1);
  CHECK(run({"characterize", "-c", "1,2,3,4,5,6,7"}).code == cli::kExitUsage);
}

TEST_CASE("family") {
  auto r = run({"family", "-c", "1,2,3,4,6,7,12"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["family"] == true);
  CHECK(run({"family", "-c", "1,2,4,5,9"}).code == cli::kExitUsage);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "-n", "4", "-B", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,2,3,4\n1,2,3,5\n1,2,4,5\n1,3,4,5\n");
  auto c = run({"enumerate", "-n", "3", "-B", "5", "--canonical-only"});
  CHECK(c.out.find("1,3,4\n") == std::string::npos);
  CHECK(c.out.find("1,2,4\n") != std::string::npos);
}

TEST_CASE("validate") {
  auto r = run({"validate", "-n", "4", "-B", "12", "--compare", "closed", "--format", "json", "--jobs", "2"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["mismatches"].empty());
  CHECK(j["total_systems"] == 165);  // C(11, 3)

  auto csv = run({"validate", "-n", "3", "-B", "4", "--compare", "pearson", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "system;canonical;min_counterexample;rule\n\"1,2,3\";true;;pearson\n"
                   "\"1,2,4\";true;;pearson\n\"1,3,4\";false;6;pearson\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"pay", "-c", "1,3,4"}).code == cli::kExitUsage);
  CHECK(run({"pay", "-c", "2,3", "-v", "1"}).code == cli::kExitUsage);
  CHECK(run({"check", "-c", "1,3", "--method", "magic"}).code == cli::kExitUsage);
  CHECK(run({"validate", "-n", "7", "-B", "10", "--compare", "closed"}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  auto bad = run({"check", "-c", "1,1,3"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find("NotStrictlyIncreasing") != std::string::npos);
}

TEST_CASE("identical arguments give identical bytes") {
  const std::vector<std::string> args{"validate", "-n", "3", "-B", "9", "--compare", "closed", "--format", "csv"};
  CHECK(run(args).out == run(args).out);
}
