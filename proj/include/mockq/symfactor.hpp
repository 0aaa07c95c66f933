#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mockq/exactnum.hpp"
#include "mockq/qlaurent.hpp"

namespace mockq {

/// Ordered set of parameter symbol names (p, lambda, mu, Lambda_rho, ...).
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(std::vector<std::string> names);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

 private:
  std::vector<std::string> names_;
};

/// coeff * q^q_exp * prod_s sym_s^{sym_exps[s]}
struct ParamMonomial {
  Rational coeff{1};
  Exponent q_exp = 0;
  std::vector<long> sym_exps;

  /// The unit monomial over `num_symbols` symbols.
  static ParamMonomial unit(std::size_t num_symbols);

  ParamMonomial& operator*=(const ParamMonomial& o);
  friend ParamMonomial operator*(ParamMonomial a, const ParamMonomial& b) { return a *= b; }
  /// Raises every part to the integer power k.
  [[nodiscard]] ParamMonomial pow(long k) const;

  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
};

/// (1 - mono)^power; mono.q_exp carries the j in 1 - M q^j.
struct BinomFactor {
  ParamMonomial mono;
  long power = 1;

  friend bool operator==(const BinomFactor&, const BinomFactor&) = default;
};

/// One per-degree summand: prefix * prod factors * prod_a Q_a^{degree_a}.
///
/// Factors are kept canonical: sorted, equal binomials merged, zero powers
/// dropped. Structural equality is therefore meaningful.
class DegreeTerm {
 public:
  DegreeTerm(std::vector<long> degree, ParamMonomial prefix, std::vector<BinomFactor> factors = {});

  [[nodiscard]] const std::vector<long>& degree() const { return degree_; }
  [[nodiscard]] const ParamMonomial& prefix() const { return prefix_; }
  [[nodiscard]] const std::vector<BinomFactor>& factors() const { return factors_; }

  [[nodiscard]] DegreeTerm with_prefix(ParamMonomial prefix) const;

  /// Multiplies prefixes, concatenates factors and adds degrees.
  friend DegreeTerm operator*(const DegreeTerm& a, const DegreeTerm& b);
  friend bool operator==(const DegreeTerm&, const DegreeTerm&) = default;

 private:
  std::vector<long> degree_;
  ParamMonomial prefix_;
  std::vector<BinomFactor> factors_;
};

/// c * q^e in the final series variable.
struct FinalMonomial {
  CycloNum c;
  Exponent e = 0;

  friend bool operator==(const FinalMonomial&, const FinalMonomial&) = default;
};

/// Maps every symbol and Novikov variable to a final-variable monomial.
///
/// series_power d means the formula's own q is q^d in the final variable;
/// it scales only exponents coming from the formula, never the e of a mapped
/// symbol.
struct Specialization {
  int field_order = CycloNum::kDefaultOrder;
  long series_power = 1;
  std::vector<std::optional<FinalMonomial>> sym_map;
  std::vector<std::optional<FinalMonomial>> novikov_map;

  /// Throws UsageError naming the first unmapped symbol or a bad series power.
  void validate(const SymbolTable& symbols, std::size_t num_novikov) const;
};

/// Exact final-variable value of a monomial (symbol exponents and the q part).
FinalMonomial specialize_monomial(const ParamMonomial& mono, const Specialization& spec);

/// Exact lower bound (in fact the exact valuation) of specialize_term's
/// result; empty when the term vanishes identically under `spec`.
/// Throws PoleError when a denominator binomial becomes zero.
std::optional<Exponent> min_q_order(const DegreeTerm& term, const Specialization& spec);

/// Expands the term under `spec` as a series exact up to `trunc`.
QSeries specialize_term(const DegreeTerm& term, const Specialization& spec, Exponent trunc);

}  // namespace mockq
