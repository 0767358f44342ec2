#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orbicoh/random_objects.hpp"

namespace orbicoh {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

/// Collects case outcomes for one suite.  Exceptions thrown by a case count
/// as failures.
class SuiteRunner {
 public:
  explicit SuiteRunner(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what);
  void run(const std::string& what, const std::function<bool()>& body);
  SuiteResult finish() { return result_; }

 private:
  SuiteResult result_;
};

// Property suites.  Each draws its instances from `seed`.
SuiteResult yoneda_suite(std::uint64_t seed, std::size_t count = 100);
SuiteResult functoriality_suite(std::uint64_t seed);
SuiteResult adjointness_suite(std::uint64_t seed, std::size_t count = 50);
SuiteResult split_equivalence_suite(std::uint64_t seed, std::size_t count = 200);
SuiteResult split_monotonicity_suite(std::uint64_t seed, std::size_t count = 50);
SuiteResult resolution_independence_suite();
SuiteResult skeleton_independence_suite();
SuiteResult subquotient_suite();
SuiteResult limit_composition_suite(std::uint64_t seed, std::size_t count = 20);
SuiteResult induced_map_functoriality_suite(std::uint64_t seed, std::size_t count = 20);
SuiteResult cohomology_functor_suite();
SuiteResult tensor_unit_suite(std::uint64_t seed, std::size_t count = 20);

std::vector<SuiteResult> run_structural_suites(std::uint64_t seed = kDefaultSeed);

/// Every recorded value of the Klein-four computation, recomputed.
SuiteResult reference_values_suite();

/// Replays every *.json resolution file in `dir`.
SuiteResult golden_files_suite(const std::string& dir);

/// Ext dimension cases that the resolution-independence suite and the
/// golden files share: (group, family, p, module, coefficients, degree).
struct ExtCase {
  std::string group;
  std::string family;
  std::uint32_t p;
  std::string module;
  std::string coefficients;
  std::size_t max_deg;
  std::vector<std::size_t> expected;
};
const std::vector<ExtCase>& ext_reference_cases();

}  // namespace orbicoh
