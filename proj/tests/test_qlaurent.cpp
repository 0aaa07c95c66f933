#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mockq/qlaurent.hpp"
#include "support.hpp"

using mockq::CycloNum;
using mockq::QSeries;
using mockq::Rational;
using testsupport::dense;

TEST_CASE("text form") {
  CHECK(dense({1, 1, -2}).to_string() == "1 + q - 2*q^2");
  CHECK(QSeries(5).to_string() == "0");
  CHECK(dense({1, 0, 1}, -1).to_string() == "q^-1 + q");
  const auto s = QSeries::monomial(mockq::zeta(6) - CycloNum(Rational(1), 6), 3, 5);
  CHECK(s.to_string() == "(-1 + z)*q^3");
}

TEST_CASE("addition") {
  CHECK(dense({1, 1}) + dense({0, -1}) == dense({1}, 0, 1));
  const auto a = dense({1, 2, 3, 4}, 0, 3);
  const auto b = dense({1, 1, 1, 1, 1, 1}, 0, 5);
  CHECK((a + b).trunc() == 3);
  CHECK(QSeries(4) + a == a);
  CHECK((a - a).is_zero());
}

TEST_CASE("multiplication") {
  const auto p = dense({1, -1}, 0, 10) * dense({1, 1, 1, 1}, 0, 10);
  CHECK(p.truncated(4) == dense({1, 0, 0, 0, -1}));
  CHECK(dense({1}, -1, 10) * dense({0, 1}, 0, 10) == QSeries::one(9));
  CHECK(dense({1, 1}, 0, 5) * dense({1, 1}, 0, 5) == dense({1, 2, 1}, 0, 5));
  // precision: lowest terms limit what the other factor can contribute
  CHECK((dense({0, 0, 1}, 0, 6) * dense({1, 1}, 0, 3)).trunc() == 5);
}

TEST_CASE("coefficient access") {
  const auto s = dense({1, 2, 3});
  CHECK(s.coeff(1) == CycloNum(Rational(2), 6));
  CHECK(s.coeff(-4).is_zero());
  CHECK_THROWS_AS((void)s.coeff(3), mockq::UsageError);
}

TEST_CASE("inversion") {
  CHECK(mockq::invert(dense({1, -1}, 0, 3)) == dense({1, 1, 1, 1}));
  CHECK(mockq::invert(dense({1, 1}, 0, 3)) == dense({1, -1, 1, -1}));
  const auto inv = mockq::invert(QSeries::monomial(CycloNum(Rational(1), 6), 2, 3));
  CHECK(inv.to_string() == "q^-2");
  CHECK(inv.trunc() == -1);
  CHECK_THROWS_AS(mockq::invert(QSeries(3)), mockq::DivisionByZero);
  const auto a = dense({2, 0, -1, 5}, 0, 8);
  CHECK(mockq::agree_to(a * mockq::invert(a), QSeries::one(8), 8));
}

TEST_CASE("substitution q -> q^d") {
  CHECK(mockq::subst_power(dense({1, 1}), 2) == dense({1, 0, 1}, 0, 2));
  const auto a = dense({3, -1, 4}, -2);
  CHECK(mockq::subst_power(a, 1) == a);
  CHECK(mockq::subst_power(dense({1, 0, 1}, -1, 1), 3) == dense({1, 0, 0, 0, 0, 0, 1}, -3, 3));
  CHECK_THROWS_AS(mockq::subst_power(a, 0), mockq::UsageError);
}

TEST_CASE("Pochhammer products") {
  const CycloNum one(Rational(1), 6);
  CHECK(mockq::pochhammer(one, 1, 0, 5) == QSeries::one(5));
  CHECK(mockq::pochhammer(one, 1, 2, 5) == dense({1, -1, -1, 1}, 0, 5));
  CHECK(mockq::pochhammer(CycloNum(Rational(2), 6), 0, 2, 5) == dense({-1, 2}, 0, 5));
  CHECK(mockq::pochhammer(one, 0, 3, 5).is_zero());  // (1 - 1) factor
}

TEST_CASE("shift and comparison") {
  CHECK(mockq::shift(dense({1, 1}), 3) == dense({1, 1}, 3));
  CHECK(mockq::first_mismatch(dense({1, 1, 1}), dense({1, 1, 2}), 2) == 2);
  CHECK_FALSE(mockq::first_mismatch(dense({1, 1, 1}), dense({1, 1, 2}), 1).has_value());
  CHECK_THROWS_AS(mockq::first_mismatch(dense({1}), dense({1, 1}), 1), mockq::UsageError);
}
