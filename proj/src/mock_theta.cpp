// Right-hand sides of the cataloged identities, summed straight from their
// displayed forms. Nothing here touches the symbolic layer.

#include <functional>
#include <map>

#include "mockq/catalog.hpp"

namespace mockq {

namespace {

using Poly = std::map<Exponent, Rational>;

// 1 + sign * q^k
Poly binom(long sign, Exponent k) { return Poly{{0, Rational(1)}, {k, Rational(sign)}}; }

// 1 + a q^k + q^{2k}
Poly trinom(long a, Exponent k) { return Poly{{0, Rational(1)}, {k, Rational(a)}, {2 * k, Rational(1)}}; }

struct Oracle {
  std::string id;
  int start;
  std::function<Exponent(long)> numerator_exp;
  std::function<std::vector<Poly>(long)> denominator;
};

std::vector<Poly> range_of(long from, long to, const std::function<Poly(long)>& f) {
  std::vector<Poly> out;
  for (long k = from; k <= to; ++k) out.push_back(f(k));
  return out;
}

std::vector<Poly> squared(std::vector<Poly> v) {
  const auto n = v.size();
  for (std::size_t i = 0; i < n; ++i) v.push_back(v[i]);
  return v;
}

const std::vector<Oracle>& oracles() {
  static const std::vector<Oracle> table = {
      {"rhs.prop1.order3.a", 0, [](long n) { return n * n; },
       [](long n) { return range_of(1, n, [](long k) { return binom(1, 2 * k); }); }},
      {"rhs.prop1.order3.b", 0, [](long n) { return n * n; },
       [](long n) { return range_of(1, n, [](long k) { return binom(-1, 2 * k - 1); }); }},
      {"rhs.prop1.order3.c", 0, [](long n) { return n * (n - 1); },
       [](long n) { return range_of(1, n, [](long k) { return binom(1, 2 * k - 1); }); }},
      {"rhs.prop1.order5.a", 0, [](long n) { return n * n; },
       [](long n) { return range_of(1, n, [](long k) { return binom(1, k); }); }},
      {"rhs.prop1.order5.b", 0, [](long n) { return 2 * n * n; },
       [](long n) { return range_of(1, n, [](long k) { return binom(-1, 2 * k - 1); }); }},
      {"rhs.prop1.order5.c", 0, [](long n) { return n * (n + 1); },
       [](long n) { return range_of(1, n, [](long k) { return binom(1, k); }); }},
      {"rhs.prop1.order5.d", 0, [](long n) { return 2 * n * n + 2 * n; },
       [](long n) { return range_of(1, n, [](long k) { return binom(-1, 2 * k - 1); }); }},
      {"rhs.prop2.order3.a", 0, [](long n) { return n * n; },
       [](long n) { return squared(range_of(1, n, [](long k) { return binom(1, k); })); }},
      {"rhs.prop2.order3.b", 0, [](long n) { return n * n; },
       [](long n) { return range_of(1, n, [](long k) { return trinom(-1, k); }); }},
      {"rhs.prop2.order3.c", 0, [](long n) { return 2 * n * n + 2 * n; },
       [](long n) { return squared(range_of(0, n, [](long k) { return binom(-1, 2 * k + 1); })); }},
      {"rhs.prop2.order3.d", 0, [](long n) { return 2 * n * n + 2 * n; },
       [](long n) { return range_of(0, n, [](long k) { return trinom(1, 2 * k + 1); }); }},
      {"rhs.prop3.order7.a", 0, [](long n) { return n * n; },
       [](long n) { return range_of(n + 1, 2 * n, [](long k) { return binom(-1, k); }); }},
      {"rhs.prop3.order7.b", 1, [](long n) { return n * n; },
       [](long n) { return range_of(n, 2 * n - 1, [](long k) { return binom(-1, k); }); }},
      {"rhs.prop3.order7.c", 1, [](long n) { return n * n - n; },
       [](long n) { return range_of(n, 2 * n - 1, [](long k) { return binom(-1, k); }); }},
  };
  return table;
}

QSeries sum_oracle(const Oracle& o, Exponent trunc) {
  QSeries total(trunc);
  for (long n = o.start;; ++n) {
    const Exponent lead = o.numerator_exp(n);
    if (lead > trunc) {
      // every numerator exponent is nondecreasing from n = 1 on
      if (n >= 1) break;
      continue;
    }
    const Exponent order = trunc - lead;
    QSeries den = QSeries::one(order);
    for (const auto& p : o.denominator(n)) den = den * QSeries::from_rational_terms(p, order);
    total += shift(invert(den), lead);
  }
  return total;
}

}  // namespace

std::vector<std::string> oracle_ids() {
  std::vector<std::string> out;
  for (const auto& o : oracles()) out.push_back(o.id);
  return out;
}

QSeries mock_theta(const std::string& oracle_id, Exponent trunc) {
  for (const auto& o : oracles()) {
    if (o.id == oracle_id) return sum_oracle(o, trunc);
  }
  throw UsageError("unknown oracle '" + oracle_id + "'");
}

}  // namespace mockq
