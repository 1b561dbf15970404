#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gtq/hilbert.hpp"
#include "gtq/operators.hpp"

// Randomized property suites with recorded residuals. Every suite is
// deterministic for a fixed config: same seed, same residuals, bitwise.

namespace gtq::verify {

struct SuiteConfig {
  std::uint64_t seed = 42;
  int trials = 1000;  // base count; cheaper suites derive theirs from it
  std::map<std::string, double> tolerances;  // overrides; defaults used otherwise
  hilbert::GridSpec grid{};
  operators::RepConfig rep{};
  operators::HeisenbergRepConfig heis{};
};

SuiteConfig default_config();

// Effective tolerance for a suite or sub-check name; throws on unknown names.
double tolerance_for(const SuiteConfig& cfg, const std::string& name);
const std::map<std::string, double>& default_tolerances();

struct SuiteReport {
  std::string suite;
  int trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<std::string> notes;
};

// Sub-checks with their own tolerance fold into max_residual scaled by
// (suite tolerance / sub tolerance), so passed <=> max_residual <= tolerance
// covers every check; raw sub-residuals are recorded in the notes.

SuiteReport suite_group_axioms(const SuiteConfig& cfg);
SuiteReport suite_bch(const SuiteConfig& cfg);
SuiteReport suite_symplectic(const SuiteConfig& cfg);
SuiteReport suite_gamma_homomorphism(const SuiteConfig& cfg);
SuiteReport suite_momentum_homomorphism(const SuiteConfig& cfg);
SuiteReport suite_hamiltonian_fields(const SuiteConfig& cfg);
SuiteReport suite_weyl_punctured(const SuiteConfig& cfg);
SuiteReport suite_weyl_r2(const SuiteConfig& cfg);
SuiteReport suite_commutators(const SuiteConfig& cfg);
SuiteReport suite_spectrum_twist(const SuiteConfig& cfg);
SuiteReport suite_quantization_map(const SuiteConfig& cfg);

std::vector<std::string> suite_names();

struct RunResult {
  std::vector<SuiteReport> reports;
  bool all_passed = false;
  double wall_seconds = 0.0;  // never serialized; reports stay deterministic
};

RunResult run_all(const SuiteConfig& cfg);
RunResult run_selected(const SuiteConfig& cfg,
                       const std::vector<std::string>& names);

// Serialized JSON array [{suite, trials, max_residual, tolerance, passed,
// notes}], byte-stable for identical configs.
std::string reports_to_json(const std::vector<SuiteReport>& reports);

}  // namespace gtq::verify
