#pragma once

#include <map>
#include <optional>
#include <string>

#include "mockq/exactnum.hpp"

namespace mockq {

using Exponent = long;

/// Truncated Laurent series in q over Q(zeta_N).
///
/// Coefficients at exponents <= trunc() are exact; everything above is
/// unknown. Zero coefficients are never stored, so two series are equal
/// exactly when their maps and truncations agree.
class QSeries {
 public:
  /// The zero series, exact up to `trunc`.
  explicit QSeries(Exponent trunc, int field_order = CycloNum::kDefaultOrder);

  static QSeries one(Exponent trunc, int field_order = CycloNum::kDefaultOrder);
  /// c*q^exp; zero when exp > trunc or c == 0.
  static QSeries monomial(const CycloNum& c, Exponent exp, Exponent trunc);
  /// Builds from (exponent, coefficient) pairs; entries above trunc are dropped.
  static QSeries from_terms(const std::map<Exponent, CycloNum>& terms, Exponent trunc,
                            int field_order = CycloNum::kDefaultOrder);
  /// Rational-coefficient convenience constructor.
  static QSeries from_rational_terms(const std::map<Exponent, Rational>& terms, Exponent trunc,
                                     int field_order = CycloNum::kDefaultOrder);

  [[nodiscard]] Exponent trunc() const { return trunc_; }
  [[nodiscard]] int field_order() const { return field_order_; }
  [[nodiscard]] const std::map<Exponent, CycloNum>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient at `exp`; throws UsageError above the truncation.
  [[nodiscard]] CycloNum coeff(Exponent exp) const;

  /// Lowest stored exponent, or trunc+1 for the zero series (a lower bound
  /// for the true valuation either way).
  [[nodiscard]] Exponent valuation_bound() const;

  /// Same series with truncation min(trunc(), t).
  [[nodiscard]] QSeries truncated(Exponent t) const;

  [[nodiscard]] std::string to_string() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const CycloNum& c);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator-(QSeries a);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const CycloNum& c) { return a *= c; }

  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  void add_term(Exponent exp, const CycloNum& c);

  // Field first so the defaulted comparison never mixes coefficient fields.
  int field_order_;
  Exponent trunc_;
  std::map<Exponent, CycloNum> coeffs_;
};

/// True when both series agree at every exponent <= t (both must be exact there).
bool agree_to(const QSeries& a, const QSeries& b, Exponent t);

/// First exponent <= t where the two series differ.
std::optional<Exponent> first_mismatch(const QSeries& a, const QSeries& b, Exponent t);

/// Multiplies by q^k; the truncation shifts along.
QSeries shift(const QSeries& a, Exponent k);

/// Multiplicative inverse. Laurent units are handled by factoring out the
/// lowest monomial: input exact to T with valuation v yields a result exact to T - 2v.
QSeries invert(const QSeries& a);

/// q -> q^d.
QSeries subst_power(const QSeries& a, long d);

/// prod_{i=0}^{n-1} (1 - c q^{j0+i}), exact up to `trunc`.
QSeries pochhammer(const CycloNum& c, Exponent j0, long n, Exponent trunc);

}  // namespace mockq
