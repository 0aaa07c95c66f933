#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "mockq/errors.hpp"

namespace mockq {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  [[nodiscard]] const mpq_class& value() const { return value_; }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] Rational inverse() const;

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
/// Monic of degree phi(N).
const std::vector<long>& cyclotomic_polynomial(int order);

/// Euler's totient.
int euler_phi(int order);

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}, reduced
/// modulo Phi_N.
class CycloNum {
 public:
  static constexpr int kDefaultOrder = 6;

  /// Zero of Q(zeta_order).
  explicit CycloNum(int order = kDefaultOrder);
  CycloNum(const Rational& value, int order);
  /// Takes coordinates of an arbitrary polynomial in z and reduces it.
  static CycloNum from_poly(std::vector<Rational> poly, int order);
  /// Exactly phi(order) coordinates.
  static CycloNum from_coords(std::vector<Rational> coords, int order);

  /// Parses the text form produced by to_string (e.g. "1/2 + z", "-1 - 2*z^3").
  static CycloNum parse(std::string_view text, int order);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  /// True when every coordinate beyond the constant one vanishes.
  [[nodiscard]] bool is_rational() const;
  /// Constant coordinate; meaningful as a value only when is_rational().
  [[nodiscard]] const Rational& constant() const { return coords_.front(); }

  [[nodiscard]] CycloNum inverse() const;
  [[nodiscard]] CycloNum pow(long exponent) const;
  /// Complex conjugation, z -> z^{-1}.
  [[nodiscard]] CycloNum conj() const;

  [[nodiscard]] std::string to_string() const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& o);
  CycloNum& operator/=(const CycloNum& o) { return *this *= o.inverse(); }

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(CycloNum a, const Rational& b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  friend CycloNum operator-(CycloNum a);

  /// Throws UsageError when the orders differ.
  friend bool operator==(const CycloNum& a, const CycloNum& b);

 private:
  int order_;
  std::vector<Rational> coords_;
};

/// The primitive N-th root of unity, i.e. the basis element z of Q(zeta_N).
CycloNum zeta(int order);

}  // namespace mockq
