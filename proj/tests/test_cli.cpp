#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "splitq/cli.hpp"
#include "support.hpp"

using namespace splitq;
using namespace splitq::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = run(args);
  REQUIRE(r.code != 2);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("similar reports a verified witness") {
  const Run r = run({"similar", "1+5i+3j+4k", "1+13i+12j+5k"});
  CHECK(r.code == 0);
  CHECK(r.out.find("similar: true") != std::string::npos);
  const auto j = run_json({"similar", "1+5i+3j+4k", "1+13i+12j+5k"});
  CHECK(j["op"] == "similar");
  CHECK(j["backend"] == "exact");
  CHECK(j["verified"] == true);
  const Q x = parse_quaternion(j["result"]["witness"].get<std::string>()).value;
  CHECK(x * Q(1, 5, 3, 4) == Q(1, 13, 12, 5) * x);
  CHECK(run({"similar", "i", "j"}).code == 1);
}

TEST_CASE("sim-solve family") {
  const auto j = run_json({"sim-solve", "1+5i+5j+2k", "2+i+j+3k"});
  CHECK(j["result"]["family"]["dimension"] == 1);
  const Q v = parse_quaternion(j["result"]["family"]["basis"][0].get<std::string>()).value;
  CHECK(v == v[1] * Q(-3, 1, 1, 3));
  CHECK(j["verified"] == true);
}

TEST_CASE("pinv and simple ops") {
  const Run zero = run({"pinv", "0"});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("value: 0") != std::string::npos);
  CHECK(run_json({"pinv", "1+j"})["result"]["value"] == "1/4+1/4j");
  CHECK(run_json({"classify", "1+j"})["result"]["class"] == "lightlike");
  CHECK(run_json({"power", "1+j", "-n", "3"})["result"]["value"] == "4+4j");
  CHECK(run_json({"roots", "i+j", "-n", "2"})["result"]["count"] == 0);
  const auto roots = run_json({"roots", "1+j", "-n", "2"});
  CHECK(roots["result"]["count"] == 2);
  CHECK(roots["backend"] == "approx");
  CHECK(roots["verified"] == true);
  CHECK(run_json({"matrix", "T", "1+5i+5j+2k", "2+i+j+3k"})["result"]["rank"] == 3);
  CHECK(run_json({"matrix", "S", "1+2i+3j+4k", "-1+2i+3j+4k"})["result"]["rank"] == 1);
}

TEST_CASE("leading minus literals stay positional") {
  CHECK(run_json({"classify", "-k"})["inputs"][0] == "-k");
  CHECK(run_json({"pinv", "-1/2+j"})["verified"] == true);
}

TEST_CASE("solvers through the CLI") {
  const auto ok = run_json({"solve-axb", "1+j", "1+j", "1+j"});
  CHECK(ok["result"]["solvable"] == true);
  CHECK(ok["result"]["family"]["constant"] == "1/4+1/4j");
  CHECK(ok["verified"] == true);
  const auto bad = run_json({"solve-axb", "1+j", "1+j", "1-j"});
  CHECK(bad["result"]["solvable"] == false);
  CHECK(bad["verified"] == true);
  CHECK(run_json({"solve-ax0", "1+j"})["result"]["family"]["dimension"] == 2);
  CHECK(run_json({"solve-axd", "1+j", "1"})["result"]["solvable"] == false);
  CHECK(run_json({"solve-xad", "1+j", "1+j"})["verified"] == true);
}

TEST_CASE("consimilarity through the CLI") {
  const auto j = run_json({"consimilar", "1+2i+3j+4k", "2+i+3j+4k"});
  CHECK(j["result"]["witness"] == "3-i");
  CHECK(run({"consimilar", "1+2i+3j+4k", "2+i+3k"}).code == 1);
  CHECK(run_json({"consim-solve", "1+2i+3j+4k", "-1+2i+3j+4k"})["result"]["family"]["dimension"] == 3);
  CHECK(run({"consimilar", "2", "i"}).code == 2);
}

TEST_CASE("canonical escalates for irrational roots") {
  const auto exact = run_json({"canonical", "1+3i+2j+k"});
  CHECK(exact["result"]["target"] == "1+2i");
  CHECK(exact["backend"] == "exact");
  const auto irr = run_json({"canonical", "2+i+2j+2k"});
  CHECK(irr["result"]["escalated"] == true);
  CHECK(irr["backend"] == "approx");
  CHECK(irr["verified"] == true);
}

TEST_CASE("backends and decimals") {
  CHECK(run_json({"pinv", "0.5+j"})["backend"] == "approx");
  CHECK(run_json({"pinv", "0.5+j", "--backend", "exact"})["backend"] == "exact");
  CHECK(run_json({"pinv", "2", "--backend", "approx"})["result"]["value"] == "0.5");
}

TEST_CASE("seed fixes the witness") {
  const auto a = run({"similar", "1+5i+3j+4k", "1+13i+12j+5k", "--seed", "11"});
  const auto b = run({"similar", "1+5i+3j+4k", "1+13i+12j+5k", "--seed", "11"});
  CHECK(a.out == b.out);
}

TEST_CASE("JSON quaternions re-parse") {
  const auto j = run_json({"solve-axb", "1+i+j+k", "1-j", "-2+2i+2j-2k"});
  REQUIRE(j["result"]["solvable"] == true);
  CHECK(j["backend"] == "exact");
  const auto& fam = j["result"]["family"];
  CHECK_NOTHROW(parse_quaternion(fam["constant"].get<std::string>()));
  for (const auto& t : fam["terms"]) {
    CHECK_NOTHROW(parse_quaternion(t["left"].get<std::string>()));
    CHECK_NOTHROW(parse_quaternion(t["right"].get<std::string>()));
  }
}

TEST_CASE("errors exit with 2") {
  const Run p = run({"pinv", "1+"});
  CHECK(p.code == 2);
  CHECK(p.err.find("offset 2") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"similar", "i"}).code == 2);
  CHECK(run({"roots", "1+j", "-n", "1"}).code == 2);
  CHECK(run({"roots", "1+2i", "-n", "2"}).code == 2);
  CHECK(run({"solve-axb", "1+2i", "1+j", "1"}).code == 2);
  CHECK(run({"matrix", "T", "i"}).code == 2);
  CHECK(run({"pinv", "1", "--backend", "float"}).code == 2);
}
