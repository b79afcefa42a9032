#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "cpspin/report.hpp"
#include "cpspin/suites.hpp"

using namespace cpspin;

namespace {

SuiteResult small_algebra(const std::string& filter = "all", std::uint64_t seed = 42) {
  AlgebraOptions o;
  o.trials = 3;
  o.seed = seed;
  o.case_filter = filter;
  return run_algebra_suite(o);
}

bool has_flag(const SuiteResult& r, const std::string& id) {
  return std::any_of(r.flags.begin(), r.flags.end(), [&](const Flag& f) { return f.id == id; });
}

}  // namespace

TEST_CASE("status follows mode and tolerance") {
  Check c{"x", Mode::exact, 1, 0.0, 0.0};
  CHECK(c.pass());
  c.max_residual = 1e-300;
  CHECK_FALSE(c.pass());
  Check f{"y", Mode::floating, 1, 1e-5, 1e-4};
  CHECK(f.pass());
  f.max_residual = 2e-4;
  CHECK_FALSE(f.pass());
}

TEST_CASE("json report follows the schema") {
  const SuiteResult r = small_algebra();
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j.at("suite") == "algebra");
  CHECK(j.at("seed") == 42);
  CHECK(j.at("version") == kVersion);
  REQUIRE(j.at("checks").is_array());
  CHECK(j.at("checks").size() == r.checks.size());
  for (const auto& c : j.at("checks")) {
    CHECK(c.at("name").is_string());
    CHECK((c.at("mode") == "exact" || c.at("mode") == "float"));
    CHECK(c.at("trials").is_number_integer());
    CHECK((c.at("max_residual").is_number() || c.at("max_residual") == "0 (exact)"));
    CHECK(c.at("status") == "pass");
  }
  // exact passes print the literal
  CHECK(j.at("checks")[0].at("max_residual") == "0 (exact)");
}

TEST_CASE("csv has a header and one row per check") {
  const SuiteResult r = small_algebra("complex");
  const std::string csv = to_csv(r);
  CHECK(csv.rfind("name,mode,trials,max_residual,status\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == r.checks.size() + 1);
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("same seed, same bytes") {
  CHECK(to_json(small_algebra("all", 9)) == to_json(small_algebra("all", 9)));
  SurfaceOptions o;
  o.surface = "rp2";
  o.grid = 4;
  o.chart_points = 3;
  CHECK(to_json(run_surface_suite(o)) == to_json(run_surface_suite(o)));
}

TEST_CASE("discrepancy flags appear in every report") {
  SurfaceOptions o;
  o.surface = "cp1";
  o.grid = 4;
  o.chart_points = 3;
  for (const SuiteResult& r : {small_algebra(), small_algebra("lagrangian"), run_surface_suite(o)}) {
    CHECK(has_flag(r, "aux_curvature_swap"));
    CHECK(has_flag(r, "complex_lemma_Tn"));
    CHECK(has_flag(r, "dirac_sign"));
  }
}

TEST_CASE("case filter restricts the generators") {
  const SuiteResult c = small_algebra("complex");
  CHECK(c.find("gluing_complex") != nullptr);
  CHECK(c.find("gluing_lagrangian") == nullptr);
  CHECK(c.find("lemma_item_1")->trials == 3);
  CHECK(small_algebra().find("lemma_item_1")->trials == 9);
}

TEST_CASE("bad inputs") {
  AlgebraOptions o;
  o.trials = 0;
  CHECK_THROWS_AS(run_algebra_suite(o), std::invalid_argument);
  o.trials = 1;
  o.case_filter = "hyperbolic";
  CHECK_THROWS_AS(run_algebra_suite(o), std::invalid_argument);
  SurfaceOptions s;
  s.surface = "klein-bottle";
  CHECK_THROWS_AS(run_surface_suite(s), std::invalid_argument);
  CHECK_THROWS_AS(format_from_string("xml"), std::invalid_argument);
  CHECK_THROWS_AS(write_report(small_algebra(), Format::json, "/nonexistent-dir/report.json"), std::runtime_error);
}

TEST_CASE("surface suite report") {
  SurfaceOptions o;
  o.surface = "clifford-torus";
  o.grid = 6;
  o.chart_points = 5;
  const SuiteResult r = run_surface_suite(o);
  CHECK(r.suite == "surface:clifford_torus");
  CHECK(r.all_pass());
  CHECK(r.find("mean_curvature") != nullptr);
  CHECK(r.find("case_detection")->pass());
  for (const Check& c : r.checks)
    if (c.name != "case_detection") CHECK(c.mode == Mode::floating);
}
