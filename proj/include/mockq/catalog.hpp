#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mockq/iseries.hpp"

namespace mockq {

/// Final-variable series applied to the specialized I-function before comparison.
enum class Prefactor { Unit, InvOneMinusQSquared, InvOnePlusQPlusQSquared, QOverOneMinusQ, InvOneMinusQ };

std::string to_string(Prefactor p);
QSeries prefactor_series(Prefactor p, Exponent trunc, int field_order = CycloNum::kDefaultOrder);

/// One checkable equality: prefactor * I(model, spec) == rhs oracle.
struct IdentitySpec {
  std::string name;
  std::string group;        ///< e.g. "prop1"
  std::string description;  ///< the equality in plain text
  std::string classical;    ///< classical mock theta name, empty when not pinned down
  ChargeModel model;
  PrefixConvention convention = PrefixConvention::PropLiteral;
  Specialization spec;
  Prefactor prefactor = Prefactor::Unit;
  std::string rhs_oracle;
  int rhs_start = 0;  ///< first summation index of the right-hand side
  Exponent default_trunc = 30;
};

struct IdentityListing {
  std::string name;
  std::string group;
  std::string description;
};

/// Registered right-hand-side series ids, registry order.
std::vector<std::string> oracle_ids();

/// The displayed right-hand-side series, summed directly with series
/// arithmetic only. Throws UsageError for an unknown id.
QSeries mock_theta(const std::string& oracle_id, Exponent trunc);

/// The 14 fixed identities in registry order.
const std::vector<IdentitySpec>& identities();
std::optional<IdentitySpec> find_identity(const std::string& name);
/// Fixed identities plus the randomized q-hypergeometric family.
std::vector<IdentityListing> list_identities();

inline constexpr const char* kHypergeometricFamily = "prop4.qhyper";

struct Mismatch {
  Exponent exp = 0;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string name;
  bool pass = false;
  Exponent trunc = 0;
  std::optional<Mismatch> first_mismatch;
  double elapsed_ms = 0;
};

/// Computes prefactor * i_function and the oracle to `trunc` and compares.
VerifyReport verify_identity(const IdentitySpec& id, Exponent trunc);

// ---------------------------------------------------------------------------
// q-hypergeometric family

/// O(-1)^r over P^s with one extra positive coordinate whose parameter is set
/// to 1, supplying (q;q)_n. Level 1+s, St representation.
ChargeModel hypergeometric_model(int r, int s);

/// p = 1, lambda_i = q / beta_i, lambda_{s+1} = 1, mu_j = alpha_j,
/// Q = (-1)^{1+s} z prod_j mu_j.
Specialization hypergeometric_specialization(const std::vector<FinalMonomial>& alphas,
                                             const std::vector<FinalMonomial>& betas, const FinalMonomial& z);

struct HypergeometricTrial {
  std::vector<FinalMonomial> alphas;
  std::vector<FinalMonomial> betas;
  FinalMonomial z;
};

/// Deterministic random parameters: small nonzero rationals away from 1 for
/// alphas and betas, z = c q^e with e in {1, 2}.
std::vector<HypergeometricTrial> hypergeometric_trials(int r, int s, int count, std::uint64_t seed);

VerifyReport verify_hypergeometric(const HypergeometricTrial& trial, Exponent trunc, const std::string& name);

/// (r,s) in {(1,1),(2,1),(1,2)}, `per_shape` trials each.
std::vector<VerifyReport> verify_hypergeometric_family(std::uint64_t seed, int per_shape, Exponent trunc);

}  // namespace mockq
