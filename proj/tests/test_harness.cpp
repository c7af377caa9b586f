// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtex/errors.hpp"
#include "qtex/harness.hpp"
#include "qtex/matrix_io.hpp"

using namespace qtex;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.dims = {2, 3};
  cfg.samples_per_dim = 10;
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("all suites pass on a small configuration") {
  const std::vector<PropertyReport> reports = run_all(small_config());
  REQUIRE(reports.size() == 4);
  for (const PropertyReport& r : reports) {
    INFO(r.suite_id);
    CHECK(r.passed);
    CHECK(r.total_violations == 0);
    CHECK(r.checks_run > 0);
  }
  CHECK(all_passed(reports));
  CHECK(reports[0].suite_id == "axioms");
  CHECK(reports[1].suite_id == "propositions");
  CHECK(reports[2].suite_id == "witnesses");
  CHECK(reports[3].suite_id == "purity_control");
}

TEST_CASE("reports are a pure function of the config") {
  const SuiteConfig cfg = small_config();
  const auto a = run_all(cfg);
  const auto b = run_all(cfg);
  CHECK(io::reports_to_json(a).dump() == io::reports_to_json(b).dump());
}

TEST_CASE("changing the seed keeps verdicts but changes samples") {
  SuiteConfig cfg = small_config();
  const PropertyReport a = run_axiom_suite(cfg);
  cfg.seed = 8;
  const PropertyReport b = run_axiom_suite(cfg);
  CHECK(a.passed);
  CHECK(b.passed);
  CHECK(a.checks_run == b.checks_run);

  // sampled values do depend on the seed: force violations into view with a
  // hostile tolerance and compare the recorded numbers
  cfg.tolerance = 1e-30;
  cfg.seed = 7;
  const PropertyReport va = run_axiom_suite(cfg);
  cfg.seed = 8;
  const PropertyReport vb = run_axiom_suite(cfg);
  REQUIRE_FALSE(va.violations.empty());
  REQUIRE_FALSE(vb.violations.empty());
  bool any_diff = false;
  for (std::size_t i = 0; i < std::min(va.violations.size(), vb.violations.size());
       ++i) {
    any_diff |= va.violations[i].lhs != vb.violations[i].lhs;
  }
  CHECK(any_diff);
}

TEST_CASE("purity control registers monotonicity breaks") {
  const PropertyReport rep = run_purity_control(small_config());
  CHECK(rep.passed);
  CHECK(rep.control_breaks > 0);
  REQUIRE_FALSE(rep.warnings.empty());
  CHECK(rep.warnings.front().find("purity_t2_breaks=") != std::string::npos);
}

TEST_CASE("degenerate configurations") {
  SUBCASE("no dims: vacuous pass with a warning") {
    SuiteConfig cfg = small_config();
    cfg.dims = {};
    const PropertyReport rep = run_axiom_suite(cfg);
    CHECK(rep.passed);
    CHECK(rep.checks_run == 0);
    REQUIRE_FALSE(rep.warnings.empty());
    CHECK(rep.warnings.front() == "no checks were run");
  }
  SUBCASE("invalid fields") {
    SuiteConfig cfg = small_config();
    cfg.samples_per_dim = 0;
    CHECK_THROWS_AS(run_axiom_suite(cfg), DomainError);

    cfg = small_config();
    cfg.dims = {1};
    CHECK_THROWS_AS(run_axiom_suite(cfg), DomainError);

    cfg = small_config();
    cfg.alpha_grid = {1.5};
    CHECK_THROWS_AS(run_axiom_suite(cfg), DomainError);

    cfg = small_config();
    cfg.theta_grid = {0.1};
    CHECK_THROWS_AS(run_witness_suite(cfg), DomainError);
  }
}

TEST_CASE("a hostile tolerance produces violation records with reproducers") {
  SuiteConfig cfg = small_config();
  cfg.tolerance = 1e-30;
  const PropertyReport rep = run_axiom_suite(cfg);
  CHECK_FALSE(rep.passed);
  CHECK(rep.total_violations > 0);
  REQUIRE_FALSE(rep.violations.empty());
  for (const Violation& v : rep.violations) {
    CHECK_FALSE(v.property_id.empty());
    CHECK(v.dim >= 2);
    CHECK(v.slack == v.lhs - v.rhs);
  }
  // identical rerun reproduces the identical violation list
  const PropertyReport rep2 = run_axiom_suite(cfg);
  REQUIRE(rep2.violations.size() == rep.violations.size());
  for (std::size_t i = 0; i < rep.violations.size(); ++i) {
    CHECK(rep.violations[i].property_id == rep2.violations[i].property_id);
    CHECK(rep.violations[i].dim == rep2.violations[i].dim);
    CHECK(rep.violations[i].sample == rep2.violations[i].sample);
    CHECK(rep.violations[i].lhs == rep2.violations[i].lhs);
  }
}

TEST_CASE("z grid respects the domain constraint") {
  SuiteConfig cfg;
  for (double a : cfg.alpha_grid) {
    const auto zs = cfg.z_values(a);
    CHECK_FALSE(zs.empty());
    for (double z : zs) CHECK(z >= std::max(a, 1.0 - a));
    CHECK(zs.front() == std::max(a, 1.0 - a));
  }
  CHECK(cfg.renyi_alphas().front() >= 0.5);
}
