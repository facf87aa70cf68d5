// Acceptance gate for the connectivity suite.  Each criterion drives one or
// more registered checks at full grid size, enforces a minimum number of
// verified instances, and pins a wall-clock budget where the workload is
// heavy enough to regress.  Prints exactly one PASS or FAIL line per
// criterion on stdout and exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "facetlab/verify.hpp"

namespace {

using facetlab::CheckReport;
using facetlab::CheckSpec;

constexpr double kNoBudget = 0.0;

struct Step {
  CheckSpec spec;
  long long min_instances = 1;
};

CheckSpec spec_of(const char* id) {
  CheckSpec s;
  s.theorem_id = id;
  return s;
}

// Runs every step of a criterion.  A step fails when its check reports a
// violation or verifies fewer instances than required; diagnostics go to
// stderr so stdout stays one line per criterion.
bool run_steps(const std::vector<Step>& steps, long long& instances,
               std::string& why) {
  for (const Step& st : steps) {
    CheckReport rep = facetlab::run_check(st.spec);
    instances += rep.instances;
    if (!rep.pass()) {
      why = st.spec.theorem_id + " found " +
            std::to_string(rep.violations.size()) + " violation(s)";
      std::fputs(facetlab::render_report(rep, false).c_str(), stderr);
      std::fputc('\n', stderr);
      return false;
    }
    if (rep.instances < st.min_instances) {
      why = st.spec.theorem_id + " verified only " +
            std::to_string(rep.instances) + " of " +
            std::to_string(st.min_instances) + " required instances";
      return false;
    }
  }
  return true;
}

struct Criterion {
  const char* label;
  std::vector<Step> steps;
  double budget_seconds = kNoBudget;
};

}  // namespace

int main() {
  CheckSpec wide_cycles = spec_of("cycle-connectivity");
  wide_cycles.n = 8;
  wide_cycles.seeds = 10;

  CheckSpec iso = spec_of("duality-graph-isomorphism");

  const std::vector<Criterion> criteria = {
      {"simple cycle facet graphs are (d+1)-connected",
       {{spec_of("cycle-connectivity"), 500}, {wide_cycles, 90}},
       120.0},
      {"hypertree facet graphs are d-connected, sharply for perturbed trees",
       {{spec_of("tree-connectivity"), 100}},
       60.0},
      {"hypercut facet graphs are (n-d-1)-connected, sharply for stars",
       {{spec_of("hypercut-connectivity"), 100}},
       kNoBudget},
      {"duality exchanges boundary with coboundary and preserves graphs",
       {{spec_of("duality-identity"), 2400},
        {spec_of("double-dual"), 100},
        {iso, 50}},
       kNoBudget},
      {"small face families collapse away and their cycles bound",
       {{spec_of("small-set-acyclicity"), 300}},
       60.0},
      {"removals disconnect no more than the removed homology allows",
       {{spec_of("toughness"), 100}, {spec_of("component-bound"), 100}},
       kNoBudget},
      {"hypersimplex graphs have connectivity exactly (d+1)(n-d-1)",
       {{spec_of("hypersimplex-connectivity"), 21}},
       180.0},
      {"coboundaries of one-dimensional cochains have 2-connected support",
       {{spec_of("two-cocycle"), 200}},
       kNoBudget},
      {"cell posets satisfy the axioms and keep the cycle connectivity bounds",
       {{spec_of("cell-axioms"), 10},
        {spec_of("cell-cycle-connectivity"), 10},
        {spec_of("pentagon"), 3},
        {spec_of("mixed-connectivity"), 6}},
       kNoBudget},
      {"Betti numbers obey the crude bound and compressed families win",
       {{spec_of("betti-crude-bound"), 300}},
       kNoBudget},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    long long instances = 0;
    std::string why;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = run_steps(c.steps, instances, why);
    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    if (ok && c.budget_seconds > 0.0 && elapsed > c.budget_seconds) {
      ok = false;
      why = "exceeded the " + std::to_string(c.budget_seconds) +
            "s wall-clock budget";
    }
    if (!ok) ++failures;
    std::printf("%s  %2d  %s  [%lld instances, %.1fs]%s%s\n",
                ok ? "PASS" : "FAIL", index, c.label, instances, elapsed,
                why.empty() ? "" : "  ", why.c_str());
    std::fflush(stdout);
  }
  return failures;
}
