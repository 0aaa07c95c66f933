#include "mockq/selfcheck.hpp"

#include <functional>
#include <random>

#include "mockq/catalog.hpp"
#include "mockq/iseries.hpp"
#include "mockq/qlaurent.hpp"
#include "mockq/symfactor.hpp"

namespace mockq {

SuiteSizes SuiteSizes::quick() {
  SuiteSizes s;
  s.field_axioms = 200;
  s.ring_axioms = 200;
  s.truncation = 200;
  s.pochhammer = 100;
  s.substitution = 100;
  s.inversion = 100;
  s.detmodify_models = 20;
  s.vanishing_models = 20;
  s.specialization = 60;
  return s;
}

namespace {

using Rng = std::mt19937_64;
constexpr int kField = CycloNum::kDefaultOrder;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng) { return Rational(uniform(rng, -9, 9), uniform(rng, 1, 9)); }

Rational random_nonzero_rational(Rng& rng) {
  while (true) {
    Rational r = random_rational(rng);
    if (!r.is_zero()) return r;
  }
}

CycloNum random_cyclo(Rng& rng, int order = kField) {
  std::vector<Rational> coords;
  for (int i = 0; i < euler_phi(order); ++i) {
    coords.push_back(uniform(rng, 0, 3) == 0 ? Rational(0) : random_rational(rng));
  }
  return CycloNum::from_coords(std::move(coords), order);
}

CycloNum random_nonzero_cyclo(Rng& rng) {
  while (true) {
    CycloNum c = random_cyclo(rng);
    if (!c.is_zero()) return c;
  }
}

QSeries random_series(Rng& rng) {
  const Exponent lo = uniform(rng, -3, 3);
  const Exponent trunc = lo + uniform(rng, 0, 9);
  std::map<Exponent, CycloNum> terms;
  for (Exponent e = lo; e <= trunc; ++e) {
    if (uniform(rng, 0, 2) != 0) terms.emplace(e, random_cyclo(rng));
  }
  return QSeries::from_terms(terms, trunc);
}

QSeries random_nonzero_series(Rng& rng) {
  while (true) {
    QSeries s = random_series(rng);
    if (!s.is_zero()) return s;
  }
}

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  /// Runs one case; a thrown exception counts as a failure.
  void run(const std::function<bool(std::string&)>& body) {
    ++result_.cases;
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) {
      ++result_.failures;
      if (result_.first_failure.empty()) {
        result_.first_failure = "case " + std::to_string(result_.cases) + ": " + detail;
      }
    }
  }

  SuiteResult finish() { return result_; }

 private:
  SuiteResult result_;
};

bool agree(const QSeries& a, const QSeries& b) { return agree_to(a, b, std::min(a.trunc(), b.trunc())); }

ChargeModel random_line_model(Rng& rng, long level) {
  ChargeModel m;
  m.s = 1;
  m.m = static_cast<int>(uniform(rng, 1, 4));
  m.charges.assign(1, {});
  for (int rho = 0; rho < m.m; ++rho) m.charges[0].push_back(uniform(rng, -3, 3));
  const long roots = uniform(rng, 1, 2);
  for (long i = 0; i < roots; ++i) m.rep_charges.push_back({uniform(rng, -3, 3)});
  m.level = level;
  for (int rho = 0; rho < m.m; ++rho) m.lambda_flags.push_back(uniform(rng, 0, 3) != 0);
  m.validate();
  return m;
}

}  // namespace

SuiteResult check_field_axioms(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Suite suite("field axioms Q(zeta_6)");
  const CycloNum zero(kField);
  const CycloNum one(Rational(1), kField);
  for (long i = 0; i < cases; ++i) {
    const CycloNum a = random_cyclo(rng);
    const CycloNum b = random_cyclo(rng);
    const CycloNum c = random_cyclo(rng);
    suite.run([&](std::string& why) {
      if (!((a + b) + c == a + (b + c))) return why = "additive associativity", false;
      if (!((a * b) * c == a * (b * c))) return why = "multiplicative associativity", false;
      if (!(a + b == b + a) || !(a * b == b * a)) return why = "commutativity", false;
      if (!(a * (b + c) == a * b + a * c)) return why = "distributivity", false;
      if (!(a + zero == a) || !(a * one == a) || !((a - a).is_zero())) return why = "identities", false;
      if (!a.is_zero() && !(a * a.inverse() == one)) return why = "a * inv(a) != 1 for " + a.to_string(), false;
      return true;
    });
  }
  return suite.finish();
}

SuiteResult check_cyclotomic_roots() {
  Suite suite("cyclotomic roots");
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    suite.run([&](std::string& why) {
      const CycloNum z = zeta(n);
      const auto& phi = cyclotomic_polynomial(n);
      CycloNum value(n);
      for (std::size_t k = 0; k < phi.size(); ++k) value += z.pow(static_cast<long>(k)) * Rational(phi[k]);
      if (!value.is_zero()) return why = "Phi_" + std::to_string(n) + "(zeta) != 0", false;
      if (!z.pow(n).is_one()) return why = "zeta_" + std::to_string(n) + "^N != 1", false;
      return true;
    });
  }
  return suite.finish();
}

SuiteResult check_rational_embedding(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Suite suite("rational embedding homomorphism");
  for (long i = 0; i < cases; ++i) {
    const Rational p = random_rational(rng);
    const Rational q = random_rational(rng);
    suite.run([&](std::string& why) {
      if (!(CycloNum(p, kField) * CycloNum(q, kField) == CycloNum(p * q, kField))) return why = "product", false;
      if (!(CycloNum(p, kField) + CycloNum(q, kField) == CycloNum(p + q, kField))) return why = "sum", false;
      return true;
    });
  }
  return suite.finish();
}

SuiteResult check_ring_axioms(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Suite suite("QSeries ring axioms");
  for (long i = 0; i < cases; ++i) {
    const QSeries a = random_series(rng);
    const QSeries b = random_series(rng);
    const QSeries c = random_series(rng);
    suite.run([&](std::string& why) {
      if (!(a * b == b * a)) return why = "multiplicative commutativity", false;
      if (!(a + b == b + a)) return why = "additive commutativity", false;
      if (!agree((a * b) * c, a * (b * c))) return why = "multiplicative associativity", false;
      if (!((a + b) + c == a + (b + c))) return why = "additive associativity", false;
      if (!agree(a * (b + c), a * b + a * c)) return why = "distributivity", false;
      // 1 must carry enough precision to cover a's negative valuation
      const Exponent one_trunc = std::max<Exponent>(0, a.trunc() - a.valuation_bound());
      if (!(a * QSeries::one(one_trunc) == a)) return why = "multiplicative identity", false;
      return true;
    });
  }
  return suite.finish();
}

SuiteResult check_truncation_consistency(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Suite suite("QSeries truncation consistency");
  for (long i = 0; i < cases; ++i) {
    const QSeries a = random_series(rng);
    const QSeries b = random_series(rng);
    suite.run([&](std::string& why) {
      const QSeries full = a * b;
      const Exponent t = full.trunc() - uniform(rng, 0, 4);
      const QSeries at = a.truncated(t - b.valuation_bound());
      const QSeries bt = b.truncated(t - a.valuation_bound());
      const QSeries partial = at * bt;
      // Cutting below the first stored term weakens the known valuation, so
      // the precision claim only holds when both valuations survive.
      const bool kept = at.valuation_bound() == a.valuation_bound() && bt.valuation_bound() == b.valuation_bound();
      if (kept && partial.trunc() < t) return why = "truncated product lost precision", false;
      if (!agree_to(full, partial, std::min(t, partial.trunc()))) return why = "truncated product disagrees", false;
      return true;
    });
  }
  return suite.finish();
}

SuiteResult check_pochhammer_recursion(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Suite suite("Pochhammer recursion");
  for (long i = 0; i < cases; ++i) {
    const CycloNum c = random_cyclo(rng);
    const Exponent j0 = uniform(rng, -3, 3);
    const long n = uniform(rng, 0, 8);
    const Exponent t = uniform(rng, 0, 15);
    suite.run([&](std::string& why) {
      const Exponent next = j0 + n;
      const Exponent inner = t - std::min<Exponent>(0, next);
      const QSeries binomial =
          QSeries::one(inner + 40) - QSeries::monomial(c, next, inner + 40);
      const QSeries lhs = pochhammer(c, j0, n + 1, t);
      const QSeries rhs = pochhammer(c, j0, n, inner) * binomial;
      if (lhs.trunc() != t || rhs.trunc() < t) return why = "truncation", false;
      if (!agree_to(lhs, rhs, t)) return why = "recursion mismatch", false;
      if (n == 0 && !(pochhammer(c, j0, 0, t) == QSeries::one(t))) return why = "(a;q)_0 != 1", false;
      return true;
    });
  }
  return suite.finish();
}

SuiteResult check_substitution_homomorphism(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Suite suite("q -> q^d homomorphism");
  for (long i = 0; i < cases; ++i) {
    const QSeries a = random_series(rng);
    const QSeries b = random_series(rng);
    const long d = uniform(rng, 1, 4);
    suite.run([&](std::string& why) {
      if (!agree(subst_power(a * b, d), subst_power(a, d) * subst_power(b, d))) return why = "product", false;
      if (!(subst_power(a + b, d) == subst_power(a, d) + subst_power(b, d))) return why = "sum", false;
      if (!(subst_power(a, 1) == a)) return why = "d = 1", false;
      return true;
    });
  }
  return suite.finish();
}

SuiteResult check_inversion(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Suite suite("QSeries inversion");
  for (long i = 0; i < cases; ++i) {
    const QSeries a = random_nonzero_series(rng);
    suite.run([&](std::string& why) {
      const QSeries inv = invert(a);
      const QSeries left = inv * a;
      const QSeries right = a * inv;
      if (left.trunc() < 0) return true;  // nothing exact to compare
      if (!agree(left, QSeries::one(left.trunc()))) return why = "inv(a)*a != 1", false;
      if (!agree(right, QSeries::one(right.trunc()))) return why = "a*inv(a) != 1", false;
      return true;
    });
  }
  return suite.finish();
}

SuiteResult check_detmodify_consistency(std::uint64_t seed, long models, long max_degree) {
  Rng rng(seed);
  Suite suite("det_modify level oracle");
  for (long i = 0; i < models; ++i) {
    const long level = uniform(rng, 0, 3);
    ChargeModel direct = random_line_model(rng, level);
    ChargeModel level0 = direct;
    level0.level = 0;
    const long l1 = uniform(rng, -2, 3);
    for (auto conv : {PrefixConvention::PropLiteral, PrefixConvention::ThmDetModify}) {
      suite.run([&](std::string& why) {
        for (long n = 0; n <= max_degree; ++n) {
          const DegreeTerm base = i_term(level0, {n}, conv);
          if (!(det_modify(base, direct.rep_charges, level, conv) == i_term(direct, {n}, conv))) {
            return why = "degree " + std::to_string(n) + " under " + to_string(conv), false;
          }
          const DegreeTerm twice =
              det_modify(det_modify(base, direct.rep_charges, l1, conv), direct.rep_charges, level, conv);
          if (!(twice == det_modify(base, direct.rep_charges, l1 + level, conv))) {
            return why = "level additivity at degree " + std::to_string(n), false;
          }
        }
        return true;
      });
    }
  }
  return suite.finish();
}

SuiteResult check_vanishing(std::uint64_t seed, long models) {
  Rng rng(seed);
  Suite suite("(1 - q^0) vanishing");
  for (long i = 0; i < models; ++i) {
    const bool rank_two = i % 2 == 1;
    ChargeModel model;
    model.s = rank_two ? 2 : 1;
    model.m = static_cast<int>(uniform(rng, 1, 4));
    model.charges.assign(static_cast<std::size_t>(model.s), {});
    for (auto& row : model.charges) {
      for (int rho = 0; rho < model.m; ++rho) row.push_back(uniform(rng, -3, 3));
    }
    // the distinguished coordinate pairs negatively with some effective degree
    const auto star = static_cast<std::size_t>(uniform(rng, 0, model.m - 1));
    model.charges[0][star] = -uniform(rng, 1, 3);
    model.rep_charges = {std::vector<long>(static_cast<std::size_t>(model.s), 1)};
    model.level = uniform(rng, 0, 3);
    model.lambda_flags.assign(static_cast<std::size_t>(model.m), true);
    if (rank_two) {
      for (long a = 0; a <= 3; ++a) {
        for (long b = 0; b <= 3; ++b) {
          if (a + b > 0) model.degrees.push_back({a, b});
        }
      }
    } else {
      model.n_max = 8;
    }
    model.validate();

    Specialization spec;
    spec.series_power = uniform(rng, 1, 2);
    for (int a = 0; a < model.s; ++a) spec.sym_map.emplace_back(FinalMonomial{CycloNum(Rational(1), kField), 0});
    for (int rho = 0; rho < model.m; ++rho) {
      if (static_cast<std::size_t>(rho) == star) {
        spec.sym_map.emplace_back(FinalMonomial{CycloNum(Rational(1), kField), 0});
        continue;
      }
      while (true) {
        const Rational c = random_nonzero_rational(rng);
        if (c.is_one()) continue;
        spec.sym_map.emplace_back(FinalMonomial{CycloNum(c, kField), 0});
        break;
      }
    }
    for (int a = 0; a < model.s; ++a) {
      spec.novikov_map.emplace_back(FinalMonomial{CycloNum(random_nonzero_rational(rng), kField), 1});
    }

    suite.run([&](std::string& why) {
      const Exponent trunc = 12;
      QSeries expected = QSeries::one(trunc);
      std::vector<std::vector<long>> degrees = model.degrees;
      if (!rank_two) {
        for (long n = 1; n <= *model.n_max; ++n) degrees.push_back({n});
      }
      for (const auto& f : degrees) {
        const DegreeTerm term = i_term(model, f, PrefixConvention::PropLiteral);
        const long beta_star = coordinate_degrees(model, f)[star];
        const QSeries value = specialize_term(term, spec, trunc);
        const bool vanished = !min_q_order(term, spec).has_value();
        if (beta_star < 0 && (!vanished || !value.is_zero())) return why = "term with beta_rho < 0 survived", false;
        if (beta_star >= 0 && vanished) return why = "term with beta_rho >= 0 vanished", false;
        expected += value;
      }
      if (!(i_function(model, PrefixConvention::PropLiteral, spec, trunc) == expected)) {
        return why = "i_function differs from the surviving terms", false;
      }
      return true;
    });
  }
  return suite.finish();
}

SuiteResult check_specialization(std::uint64_t seed, long cases) {
  Rng rng(seed);
  Suite suite("term specialization");
  for (long i = 0; i < cases; ++i) {
    ChargeModel model = random_line_model(rng, uniform(rng, 0, 3));
    model.n_max = 6;
    const SymbolTable symbols = model.symbols();
    Specialization spec;
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      spec.sym_map.emplace_back(FinalMonomial{CycloNum(random_nonzero_rational(rng), kField), 0});
    }
    spec.novikov_map.emplace_back(FinalMonomial{random_nonzero_cyclo(rng), 0});
    const long n1 = uniform(rng, 1, 3);
    const long n2 = uniform(rng, 1, 3);
    const long d = uniform(rng, 2, 3);
    const Exponent trunc = uniform(rng, 0, 8);
    suite.run([&](std::string& why) {
      const DegreeTerm t1 = i_term(model, {n1}, PrefixConvention::PropLiteral);
      const DegreeTerm t2 = i_term(model, {n2}, PrefixConvention::ThmDetModify);
      const QSeries s1 = specialize_term(t1, spec, trunc);
      const QSeries s2 = specialize_term(t2, spec, trunc);

      if (auto low = min_q_order(t1, spec)) {
        if (!s1.is_zero() && s1.coeffs().begin()->first < *low) return why = "coefficient below min_q_order", false;
      } else if (!s1.is_zero()) {
        return why = "vanishing term produced a nonzero series", false;
      }

      const QSeries joint = specialize_term(t1 * t2, spec, trunc);
      const QSeries separate = s1 * s2;
      if (!agree_to(joint, separate, std::min(joint.trunc(), separate.trunc()))) {
        return why = "product of terms", false;
      }

      Specialization powered = spec;
      powered.series_power = d;
      const QSeries direct = specialize_term(t1, powered, d * trunc);
      const QSeries routed = subst_power(s1, d);
      if (!agree_to(direct, routed, d * trunc)) return why = "series_power versus q -> q^d", false;
      return true;
    });
  }
  return suite.finish();
}

std::vector<SuiteResult> run_selfcheck(std::uint64_t seed, const SuiteSizes& sizes) {
  std::vector<SuiteResult> out;
  out.push_back(check_field_axioms(seed, sizes.field_axioms));
  out.push_back(check_cyclotomic_roots());
  out.push_back(check_rational_embedding(seed + 1, sizes.field_axioms));
  out.push_back(check_ring_axioms(seed + 2, sizes.ring_axioms));
  out.push_back(check_truncation_consistency(seed + 3, sizes.truncation));
  out.push_back(check_pochhammer_recursion(seed + 4, sizes.pochhammer));
  out.push_back(check_substitution_homomorphism(seed + 5, sizes.substitution));
  out.push_back(check_inversion(seed + 6, sizes.inversion));
  out.push_back(check_detmodify_consistency(seed + 7, sizes.detmodify_models, sizes.detmodify_max_degree));
  out.push_back(check_vanishing(seed + 8, sizes.vanishing_models));
  out.push_back(check_specialization(seed + 9, sizes.specialization));
  return out;
}

}  // namespace mockq
