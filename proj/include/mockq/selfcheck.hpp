#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mockq {

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;  ///< empty when clean

  [[nodiscard]] bool ok() const { return failures == 0; }
};

/// Case counts for every property suite.
struct SuiteSizes {
  long field_axioms = 1000;
  long ring_axioms = 1000;
  long truncation = 1000;
  long pochhammer = 200;
  long substitution = 200;
  long inversion = 200;
  long detmodify_models = 50;
  long detmodify_max_degree = 10;
  long vanishing_models = 50;
  long specialization = 200;

  /// Smaller counts for a quick interactive run.
  static SuiteSizes quick();
};

SuiteResult check_field_axioms(std::uint64_t seed, long cases);
SuiteResult check_cyclotomic_roots();
SuiteResult check_rational_embedding(std::uint64_t seed, long cases);
SuiteResult check_ring_axioms(std::uint64_t seed, long cases);
SuiteResult check_truncation_consistency(std::uint64_t seed, long cases);
SuiteResult check_pochhammer_recursion(std::uint64_t seed, long cases);
SuiteResult check_substitution_homomorphism(std::uint64_t seed, long cases);
SuiteResult check_inversion(std::uint64_t seed, long cases);
/// det_modify(level-0 term) == level-l term for random s = 1 models, both
/// conventions, plus additivity of levels.
SuiteResult check_detmodify_consistency(std::uint64_t seed, long models, long max_degree);
/// Degrees with beta_rho < 0 and U_rho -> 1 contribute exactly zero.
SuiteResult check_vanishing(std::uint64_t seed, long models);
/// Term-level specialization properties: valuation bound, term products,
/// series_power versus q -> q^d.
SuiteResult check_specialization(std::uint64_t seed, long cases);

/// Runs every suite in a fixed order.
std::vector<SuiteResult> run_selfcheck(std::uint64_t seed, const SuiteSizes& sizes);

}  // namespace mockq
