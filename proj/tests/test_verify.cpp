#include <cstdlib>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "facetlab/verify.hpp"

using facetlab::CheckReport;
using facetlab::CheckSpec;
using facetlab::InstanceTooLarge;
using facetlab::Json;
using facetlab::registered_checks;
using facetlab::render_report;
using facetlab::run_check;
using facetlab::UnknownTheorem;

namespace {

CheckSpec quick(const std::string& id) {
  CheckSpec spec;
  spec.theorem_id = id;
  spec.seeds = 2;
  if (id == "duality-identity" || id == "double-dual") spec.n = 5;
  if (id == "betti-crude-bound") spec.n = 5;
  if (id == "cycle-connectivity" || id == "hypercut-connectivity") spec.n = 5;
  if (id == "components-localization" || id == "component-bound" ||
      id == "toughness" || id == "cycle-mixed-removal")
    spec.d = 2;
  return spec;
}

}  // namespace

TEST_CASE("the check registry lists the connectivity suite") {
  std::vector<std::string> ids = registered_checks();
  CHECK(ids.size() == 21);
  for (const std::string id :
       {"cycle-connectivity", "tree-connectivity", "hypercut-connectivity",
        "duality-identity", "mixed-connectivity", "pentagon"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
}

TEST_CASE("every registered check passes on a reduced grid") {
  for (const std::string& id : registered_checks()) {
    CheckReport rep = run_check(quick(id));
    INFO(render_report(rep, false));
    CHECK(rep.theorem_id == id);
    CHECK(rep.instances > 0);
    CHECK(rep.pass());
  }
}

TEST_CASE("check runs are deterministic across thread counts") {
  CheckSpec spec;
  spec.theorem_id = "duality-identity";
  spec.seeds = 25;
  spec.n = 6;

  setenv("FACETLAB_THREADS", "1", 1);
  CheckReport serial = run_check(spec);
  setenv("FACETLAB_THREADS", "7", 1);
  CheckReport parallel = run_check(spec);
  unsetenv("FACETLAB_THREADS");
  CheckReport fresh = run_check(spec);

  CHECK(serial.instances == parallel.instances);
  CHECK(serial.instances == fresh.instances);
  CHECK(serial.extremes == parallel.extremes);
  CHECK(serial.violations.size() == parallel.violations.size());

  CheckSpec cycles;
  cycles.theorem_id = "cycle-connectivity";
  cycles.seeds = 4;
  setenv("FACETLAB_THREADS", "1", 1);
  CheckReport a = run_check(cycles);
  setenv("FACETLAB_THREADS", "5", 1);
  CheckReport b = run_check(cycles);
  unsetenv("FACETLAB_THREADS");
  CHECK(a.instances == b.instances);
  CHECK(a.extremes == b.extremes);
}

TEST_CASE("unknown theorem ids are rejected") {
  CheckSpec spec;
  spec.theorem_id = "no-such-theorem";
  CHECK_THROWS_AS(run_check(spec), UnknownTheorem);
}

TEST_CASE("oversized exhaustive grids are refused") {
  CheckSpec spec;
  spec.theorem_id = "r-connected-complex";
  spec.n = 9;
  spec.d = 2;
  CHECK_THROWS_AS(run_check(spec), InstanceTooLarge);
}

TEST_CASE("reports render as text and as json") {
  CheckSpec spec;
  spec.theorem_id = "pentagon";
  CheckReport rep = run_check(spec);
  REQUIRE(rep.pass());

  std::string text = render_report(rep, false);
  CHECK(text.rfind("PASS pentagon", 0) == 0);
  CHECK(text.find("instances") != std::string::npos);

  Json j = Json::parse(render_report(rep, true));
  CHECK(j["theorem"] == "pentagon");
  CHECK(j["pass"] == true);
  CHECK(j["instances"] == rep.instances);
  CHECK(j["violations"].is_array());
  CHECK(j["violations"].empty());
}

TEST_CASE("tallies merge extremes by prefix") {
  facetlab::verifydetail::Tally a;
  a.count(3);
  a.minimize("min slack", 4);
  a.maximize("max order", 10);

  facetlab::verifydetail::Tally b;
  b.count(2);
  b.minimize("min slack", 2);
  b.maximize("max order", 7);
  b.violation(Json::object({{"check", "example"}}));

  a.merge(std::move(b));
  CHECK(a.instances == 5);
  CHECK(a.extremes.at("min slack") == 2);
  CHECK(a.extremes.at("max order") == 10);
  REQUIRE(a.violations.size() == 1);
  CHECK(a.violations[0]["check"] == "example");
}
