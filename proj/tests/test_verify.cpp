#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "gtq/verify.hpp"

using namespace gtq::verify;

namespace {

// Small deterministic config so the whole file stays fast. 128 points per
// direction is the smallest grid whose n/4 cutoff can hold a state that is
// both band-limited and negligible at the s boundary.
SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.seed = 42;
  cfg.trials = 100;
  cfg.grid = gtq::hilbert::make_grid(128, 128, -4.0, 4.0);
  cfg.heis.box = gtq::hilbert::make_box_grid(128, 8.0);
  return cfg;
}

}  // namespace

TEST_CASE("every suite passes on the small config") {
  const RunResult result = run_all(small_config());
  CHECK(result.reports.size() == 11);
  for (const SuiteReport& rep : result.reports) {
    CAPTURE(rep.suite);
    CHECK(rep.passed);
    CHECK(rep.passed == (rep.max_residual <= rep.tolerance));
    CHECK(rep.tolerance > 0.0);
    CHECK(rep.trials >= 1);
  }
  CHECK(result.all_passed);
  CHECK(result.wall_seconds > 0.0);
}

TEST_CASE("suite order is fixed") {
  const auto names = suite_names();
  CHECK(names.size() == 11);
  CHECK(names.front() == "group_axioms");
  CHECK(names.back() == "quantization_map");
  const RunResult result = run_selected(small_config(), {"bch", "symplectic"});
  CHECK(result.reports.size() == 2);
  CHECK(result.reports[0].suite == "bch");
  CHECK(result.reports[1].suite == "symplectic");
}

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(run_selected(small_config(), {"nope"}), std::invalid_argument);
}

TEST_CASE("identical configs give bitwise-identical residuals") {
  const SuiteConfig cfg = small_config();
  const SuiteReport a = suite_momentum_homomorphism(cfg);
  const SuiteReport b = suite_momentum_homomorphism(cfg);
  CHECK(a.max_residual == b.max_residual);

  const SuiteReport c = suite_weyl_punctured(cfg);
  const SuiteReport d = suite_weyl_punctured(cfg);
  CHECK(c.max_residual == d.max_residual);

  SuiteConfig other = cfg;
  other.seed = 43;
  const SuiteReport e = suite_momentum_homomorphism(other);
  CHECK(e.max_residual != a.max_residual);
}

TEST_CASE("tolerance overrides flow into reports and pass flags") {
  SuiteConfig cfg = small_config();
  cfg.tolerances["group_axioms"] = 1e-30;  // unreachable
  const SuiteReport rep = suite_group_axioms(cfg);
  CHECK(rep.tolerance == 1e-30);
  CHECK_FALSE(rep.passed);

  const RunResult result = run_selected(cfg, {"group_axioms", "bch"});
  CHECK_FALSE(result.all_passed);

  CHECK_THROWS_AS(tolerance_for(small_config(), "unheard_of"), std::invalid_argument);
  CHECK(tolerance_for(small_config(), "commutators") == 1e-8);
}

TEST_CASE("json report schema") {
  const SuiteConfig cfg = small_config();
  const RunResult result = run_selected(cfg, {"group_axioms", "momentum_homomorphism"});
  const std::string text = reports_to_json(result.reports);

  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc.is_array());
  CHECK(doc.size() == 2);
  for (const auto& entry : doc) {
    CHECK(entry.contains("suite"));
    CHECK(entry.contains("trials"));
    CHECK(entry.contains("max_residual"));
    CHECK(entry.contains("tolerance"));
    CHECK(entry.contains("passed"));
    CHECK(entry.contains("notes"));
    CHECK(entry["passed"].get<bool>());
  }

  // Byte-identical across repeated runs of the same config.
  const RunResult again = run_selected(cfg, {"group_axioms", "momentum_homomorphism"});
  CHECK(reports_to_json(again.reports) == text);
}

TEST_CASE("suites record their convention notes") {
  const SuiteConfig cfg = small_config();
  const SuiteReport momentum = suite_momentum_homomorphism(cfg);
  bool found = false;
  for (const std::string& note : momentum.notes) {
    if (note.find("cocycle") != std::string::npos) found = true;
  }
  CHECK(found);

  const SuiteReport commutators = suite_commutators(cfg);
  found = false;
  for (const std::string& note : commutators.notes) {
    if (note.find("hbar") != std::string::npos) found = true;
  }
  CHECK(found);
}
