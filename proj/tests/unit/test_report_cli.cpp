#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "sasaki/verify_suite.hpp"

using namespace sasaki;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pass is recomputed from residual and tolerance") {
  CHECK(make_check("a", 1e-9, 1e-8).pass);
  CHECK_FALSE(make_check("a", 1e-8, 1e-8).pass);
  CHECK_FALSE(make_check("a", std::nan(""), 1.0).pass);
  VerificationReport r("x");
  r.add(make_check("a", 1e-9, 1e-8));
  r.override_tolerance(1e-10);
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("JSON reports round-trip byte for byte") {
  const VerificationReport r = verify_example("s5-surface");
  const std::string a = r.to_json_string();
  const std::string b = VerificationReport::from_json(nlohmann::json::parse(a)).to_json_string();
  CHECK(a == b);
  const std::string csv = r.to_csv();
  CHECK(csv.rfind("check,residual,tolerance,pass\n", 0) == 0);
}

TEST_CASE("verify exit codes") {
  const Run ok = cli({"verify", "corollary-c1"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["computed"]["mean_curvature"]["value"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(j["computed"]["mean_curvature"]["symbolic"] == "2/3");
  CHECK(j["computed"]["grid"]["per_axis"] == 5);
  const Run cyl = cli({"verify", "cylinder-c1", "--format", "csv"});
  CHECK(cyl.code == 0);
  CHECK(cli({"verify", "corollary-c1", "--tol", "1e-20"}).code == 1);
  CHECK(cli({"verify", "no-such-example"}).code == 2);
  CHECK(cli({"verify", "legendre-helix:1.5"}).code == 2);
  CHECK(cli({"verify", "corollary-c1", "--format", "xml"}).code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("classify output") {
  const Run c1 = cli({"classify", "--c", "1"});
  CHECK(c1.code == 0);
  const auto j = nlohmann::json::parse(c1.out);
  CHECK(j["computed"]["flat"].size() == 1);
  CHECK(j["computed"]["case_II"].empty());
  const Run neg = cli({"classify", "--c", "-0.5"});
  CHECK(neg.code == 0);
  CHECK(nlohmann::json::parse(neg.out)["computed"]["flat"].empty());
  const Run m4 = cli({"classify", "--mode", "minus4"});
  CHECK(m4.code == 0);
  const auto jm = nlohmann::json::parse(m4.out);
  CHECK(jm["computed"]["flat"].size() == 3);
  CHECK(jm["computed"]["case_II"].size() == 1);
  CHECK(cli({"classify", "--mode", "minus4", "--c", "2"}).code == 2);
  CHECK(cli({"classify", "--c-sweep", "1:0:0.5"}).code == 2);
  CHECK(cli({"classify", "--c-sweep", "0:1"}).code == 2);
  CHECK(cli({"classify", "--c", "1", "--c-sweep", "0:1:0.5"}).code == 2);
  CHECK(cli({"classify"}).code == 2);
}

TEST_CASE("every registered example passes") {
  for (const std::string& name : registered_examples()) {
    const std::string run = name == "legendre-helix:<k1>" ? "legendre-helix:0.25" : name;
    CAPTURE(run);
    const VerificationReport r = verify_example(run, {3, std::nullopt, Execution::parallel});
    for (const CheckResult& c : r.checks()) CHECK_MESSAGE(c.pass, run << ": " << c.name);
  }
}
