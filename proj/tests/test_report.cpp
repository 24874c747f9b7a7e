#include <doctest.h>

#include "srsgkit/catalog.hpp"
#include "srsgkit/report.hpp"

using namespace srsgkit;
using nlohmann::json;

namespace {
const std::string kFixtures = SRSGKIT_FIXTURES_DIR;
}

TEST_CASE("check report") {
  const json out = check_json(build("S_9").graph);
  CHECK(out["n"] == 9);
  CHECK(out["r"] == 6);
  CHECK(out["rho"] == 2);
  CHECK(out["class"] == "C5");
  CHECK(out["params"] == json{{"n", 9}, {"r", 6}, {"a", -1}, {"b", 3}, {"c", -2}});
  CHECK(out["balanced"] == false);
  CHECK(out["triangle_census"].size() == 4);
  CHECK(out["canonical_form"] == canonical_form(build("S_9").graph).hex());

  const std::vector<SignedEdge> path = {{0, 1, Sign::positive}, {1, 2, Sign::negative}};
  const json irregular = check_json(SignedGraph::from_signed_edges(3, path));
  CHECK(irregular["degrees"] == json{1, 2, 1});
  CHECK(irregular["net_degrees"] == json{1, 0, -1});
  CHECK(irregular["params"].is_null());
  CHECK(irregular["class"] == "NotSRSG");
  CHECK_FALSE(irregular.contains("r"));
}

TEST_CASE("undefined entries are null") {
  const json p = to_json(SrsgParams{10, 3, 0, std::nullopt, 1});
  CHECK(p["b"].is_null());
  CHECK(p["a"] == 0);
}

TEST_CASE("candidate list marks the free family") {
  ParamQuery q;
  q.r = 6;
  q.rho = 4;
  q.fix_b = 0;
  const json list = to_json(feasible_param_sets(q));
  bool family = false;
  for (const json& item : list) {
    if (item["kind"] == "free-family") {
      family = true;
      CHECK(item["n"] == "free");
      CHECK(item["c"] == 0);
    }
  }
  CHECK(family);
}

TEST_CASE("search report is deterministic and omits timing by default") {
  SearchConfig cfg;
  cfg.rho = 0;
  const json a = to_json(search_srsg(build_underlying("G8"), cfg, "G8"));
  cfg.jobs = 4;
  const json b = to_json(search_srsg(build_underlying("G8"), cfg, "G8"));
  CHECK(a.dump() == b.dump());
  CHECK_FALSE(a["stats"].contains("wall_seconds"));
  CHECK(a["hits"].size() == 2);
  CHECK(a["graphs"][0]["name"] == "G8");
  CHECK(to_json(search_srsg(build_underlying("G8"), cfg, "G8"), true)["stats"].contains("wall_seconds"));
}

TEST_CASE("error objects") {
  const json e = error_json(Error(ErrorKind::BadSign, "sign '0' is not + or -", 3, "x.sg"));
  CHECK(e["error"]["kind"] == "BadSign");
  CHECK(e["error"]["line"] == 3);
  CHECK(e["error"]["source"] == "x.sg");
  CHECK_FALSE(error_json(Error(ErrorKind::Io, "gone"))["error"].contains("line"));
}

TEST_CASE("catalog entry json") {
  const json e = to_json(build("S1_9"));
  CHECK(e["provenance"] == "SearchDerived");
  CHECK(e["rho"] == 2);
  CHECK(e["class"] == "C5");
}

TEST_CASE("classification summary") {
  const ClassificationSummary first = verify_classification(6, kFixtures);
  const ClassificationSummary second = verify_classification(6, kFixtures, 4);
  CHECK(to_json(first).dump() == to_json(second).dump());
  REQUIRE(first.theorems.size() == 3);
  CHECK(first.theorems[0].rho == 4);
  CHECK(first.theorems[0].pass);
  REQUIRE(first.eliminations.size() == 1);
  CHECK(first.eliminations[0].pass);
  CHECK_THROWS_AS(verify_classification(5, kFixtures), Error);
}
