#include <string>
#include <vector>

#include "common.hpp"
#include "fintop/error.hpp"
#include "fintop/io.hpp"
#include "fintop/suite.hpp"
#include "json.hpp"

using namespace fintop;

TEST_SUITE("verifier-cli") {

TEST_CASE("spaces suite up to 4 points") {
  SuiteBounds b;
  b.max_points = 4;
  const VerificationReport r = run_suite("spaces", b);
  CHECK(r.passed());
  const CheckResult* valid = r.find("spaces.valid_topology");
  REQUIRE(valid != nullptr);
  CHECK(valid->population == 1 + 4 + 29 + 355);
  CHECK(r.counts.at("spaces.n4") == 355);
  for (const CheckResult& c : r.checks) {
    if (c.status == Verdict::fail) CHECK(c.witness.has_value());
  }
}

TEST_CASE("all suite at minimal bounds") {
  SuiteBounds b;
  b.max_points = 2;
  b.groups = {"cyclic2"};
  const VerificationReport r = run_suite("all", b);
  CHECK(r.passed());
  CHECK(r.counts.at("spaces.n2") == 4);
  CHECK(r.counts.at("groups.cyclic2.semitopological") == 2);
}

TEST_CASE("groups suite on the builtin set") {
  SuiteBounds b;
  b.groups = default_suite_groups();
  const VerificationReport r = run_suite("groups", b);
  CHECK(r.passed());
  CHECK(r.counts.at("groups.cyclic4.semitopological") == 3);
  for (const CheckResult& c : r.checks) CHECK_MESSAGE(c.status != Verdict::fail, c.id);
}

TEST_CASE("bad suites and bounds") {
  CHECK_THROWS_CODE(run_suite("nope", SuiteBounds{}), ErrorCode::unknown_suite);
  SuiteBounds big;
  big.max_points = 6;
  CHECK_THROWS_CODE(run_suite("spaces", big), ErrorCode::bounds_too_large);
  SuiteBounds bad_group;
  bad_group.groups = {"monster"};
  CHECK_THROWS_CODE(run_suite("groups", bad_group), ErrorCode::unknown_spec);
}

TEST_CASE("injected failure carries a witness") {
  SuiteBounds b;
  b.max_points = 2;
  b.groups = {"cyclic2"};
  b.inject_failure = "spaces.de_morgan";
  const VerificationReport r = run_suite("all", b);
  CHECK_FALSE(r.passed());
  const CheckResult* c = r.find("spaces.de_morgan");
  REQUIRE(c != nullptr);
  CHECK(c->status == Verdict::fail);
  CHECK(c->witness.has_value());
}

TEST_CASE("report JSON is deterministic across job counts") {
  SuiteBounds b;
  b.max_points = 3;
  b.groups = {"cyclic4", "sym3"};
  const std::string serial = report_to_json(run_suite("all", b), false);
  b.jobs = 3;
  CHECK(report_to_json(run_suite("all", b), false) == serial);
  const auto j = nlohmann::json::parse(serial);
  CHECK(j.at("suite") == "all");
  CHECK(j.at("passed") == true);
  CHECK_FALSE(j.at("checks").at(0).contains("elapsed_ms"));
}

TEST_CASE("JSON io round trips") {
  const std::string space = R"({"points": 2, "opens": [[], [1], [0, 1]]})";
  const FiniteSpace s = space_from_json(space);
  CHECK(s.key() == "1101");
  CHECK(space_from_json(space_to_json(s)) == s);
  const GroupWithTopology g =
      group_topology_from_json(R"({"group": "cyclic4", "opens": [[], [0, 2], [1, 3], [0, 1, 2, 3]]})");
  CHECK(group_topology_from_json(group_topology_to_json(g)).space() == g.space());
  CHECK(group_from_json(group_to_json(g.group())) == g.group());
  CHECK_THROWS_CODE(space_from_json("{"), ErrorCode::parse_error);
  CHECK_THROWS_CODE(space_from_json(R"({"points": 2, "opens": [[0], [1]]})"), ErrorCode::missing_empty_or_full);
}

TEST_CASE("classify and dot output") {
  const Model z4 = model_from_json(R"({"group": "cyclic4", "opens": [[], [0, 2], [1, 3], [0, 1, 2, 3]]})");
  const auto j = nlohmann::json::parse(classify_json(z4));
  CHECK(j.at("semitopological") == true);
  CHECK(j.at("topological") == true);
  CHECK(j.at("E_G") == std::vector<int>{0, 2});
  CHECK(j.at("H") == std::vector<int>{0, 2});
  CHECK(j.at("S_G").at("closure").size() == 8);

  const Model s = model_from_json(R"({"points": 2, "opens": [[], [1], [0, 1]]})");
  const std::string dot = to_dot(std::get<FiniteSpace>(s));
  CHECK(dot.find("0 -> 1") != std::string::npos);
  CHECK(dot.find("1 -> 0") == std::string::npos);
}

}  // TEST_SUITE
