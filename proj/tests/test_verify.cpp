#include <doctest.h>

#include <algorithm>
#include <json.hpp>

#include "chevalley/arith.hpp"
#include "chevalley/verify.hpp"

using namespace chevalley;

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope"), Error); }

TEST_CASE("report json round trip is exact and deterministic") {
  VerifyReport a = run_suite("minus_one");
  VerifyReport b = run_suite("minus_one");
  CHECK(a.to_json().dump() == b.to_json().dump());
  VerifyReport c = VerifyReport::from_json(a.to_json());
  CHECK(c.to_json().dump(2) == a.to_json().dump(2));
  CHECK(a.to_json()["summary"]["total"] == a.cases.size());
  CHECK(std::is_sorted(a.cases.begin(), a.cases.end(),
                       [](const VerifyCase& x, const VerifyCase& y) { return x.id < y.id; }));
  CHECK(a.ok());
}

TEST_CASE("small suites pass") {
  for (const char* s : {"minus_one", "tits", "kac", "purity"}) {
    CAPTURE(s);
    VerifyReport r = run_suite(s);
    CHECK(r.cases.size() > 0);
    for (const auto& c : r.cases)
      if (!c.pass) FAIL_CHECK(c.id << " expected " << c.expected << " got " << c.actual);
  }
}

TEST_CASE("zrho: the failures are exactly the label-one identity rows outside A1") {
  VerifyReport r = run_suite("zrho");
  std::size_t identity_failures = 0;
  for (const auto& c : r.cases) {
    CAPTURE(c.id);
    const bool is_identity = c.id.size() > 9 && c.id.compare(c.id.size() - 9, 9, "/identity") == 0;
    if (!is_identity) {
      CHECK(c.pass);
      continue;
    }
    if (c.pass) continue;
    ++identity_failures;
    CHECK(c.id.rfind("zrho/A1/", 0) != 0);
    CHECK(c.id.find("/node0/") == std::string::npos);
  }
  CHECK(identity_failures == 66);
}

TEST_CASE("classification: the only disagreement is E7(-5)[sc]") {
  VerifyReport r = run_suite("classification");
  std::vector<std::string> failing;
  for (const auto& c : r.cases)
    if (!c.pass) failing.push_back(c.id);
  REQUIRE(failing.size() == 1);
  CHECK(failing[0] == "classification/E7/E7(-5)[sc]");
}

TEST_CASE("self-dual table") {
  CHECK_THROWS_AS(selfdual_table(0), Error);
  CHECK_THROWS_AS(selfdual_table(9), Error);
  auto rows = selfdual_table(1);
  CHECK(rows.size() == 5);
  for (const auto& r : rows) {
    CHECK(r.type == "A1");
    CHECK(r.minus_one);
    // SL(2,R) is the one rank-one group with a non-self-dual representation
    CHECK(r.self_dual_all == (r.name != "SU(1,1)"));
  }
}
