#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mockq/qlaurent.hpp"
#include "mockq/symfactor.hpp"

namespace mockq {

/// Which form of the level-l prefix a generator emits per Chern root L_i
/// with beta_i = <r_i, f>:
///   PropLiteral:   (L_i^{beta_i}  q^{beta_i (beta_i - 1)/2})^l
///   ThmDetModify:  (L_i^{-beta_i} q^{(beta_i + 1) beta_i/2})^l
enum class PrefixConvention { PropLiteral, ThmDetModify };

std::string to_string(PrefixConvention conv);
/// Accepts "prop_literal" and "thm_detmodify".
PrefixConvention parse_convention(const std::string& text);

/// Toric target with torus (C*)^s acting on C^m through the charge matrix,
/// a representation given by its Chern-root characters and a level.
///
/// Symbols are laid out as P_1..P_s first, then the equivariant parameters of
/// the flagged coordinates in coordinate order.
struct ChargeModel {
  int s = 1;
  int m = 1;
  std::vector<std::vector<long>> charges;      ///< s x m
  std::vector<std::vector<long>> rep_charges;  ///< one s-tuple per Chern root
  long level = 0;
  std::vector<bool> lambda_flags;              ///< per coordinate
  /// Names for the P symbols; default "p" (s = 1) or "p_1".."p_s".
  std::vector<std::string> p_names;
  /// Names for the flagged equivariant parameters; default "Lambda_<rho>".
  std::vector<std::string> lambda_names;
  /// Names of the Novikov variables; default "Q" (s = 1) or "Q_1".."Q_s".
  std::vector<std::string> novikov_names;
  /// s = 1: sum n = 1..n_max when set, otherwise until convergence.
  std::optional<long> n_max;
  /// s > 1: the explicit list of degree tuples.
  std::vector<std::vector<long>> degrees;

  /// Fills default names and checks dimensions; throws UsageError.
  void validate();
  [[nodiscard]] SymbolTable symbols() const;
  [[nodiscard]] std::size_t num_novikov() const { return static_cast<std::size_t>(s); }
};

/// beta_rho = sum_a Q_{a rho} f_a for every coordinate.
std::vector<long> coordinate_degrees(const ChargeModel& model, const std::vector<long>& f);

/// Symbolic summand of the I-function at degree f.
DegreeTerm i_term(const ChargeModel& model, const std::vector<long>& f, PrefixConvention conv);

/// Multiplies the prefix by the level factor of `conv` for the given Chern
/// roots. P_a are taken to be symbols 0..s-1 of the term's table.
DegreeTerm det_modify(const DegreeTerm& term, const std::vector<std::vector<long>>& rep_charges,
                      long level, PrefixConvention conv);

struct SummationLimits {
  /// Stop once this many consecutive degrees sit entirely above the truncation.
  int settle_count = 3;
  long degree_cap = 400;
};

/// 1 + sum over enumerated degrees of the specialized summands, exact to trunc.
QSeries i_function(const ChargeModel& model, PrefixConvention conv, const Specialization& spec,
                   Exponent trunc, const SummationLimits& limits = {});

/// General basic hypergeometric series r phi s with parameters given as final
/// variable monomials:
///   sum_n (a_1;q)_n..(a_r;q)_n / ((b_1;q)_n..(b_s;q)_n (q;q)_n) z^n [(-1)^n q^{n(n-1)/2}]^{1+s-r}
QSeries q_hypergeometric(const std::vector<FinalMonomial>& alphas,
                         const std::vector<FinalMonomial>& betas, const FinalMonomial& z,
                         Exponent trunc, const SummationLimits& limits = {});

}  // namespace mockq
