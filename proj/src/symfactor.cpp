#include "mockq/symfactor.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace mockq {

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw UsageError("empty symbol name");
    if (!seen.insert(n).second) throw UsageError("duplicate symbol name '" + n + "'");
  }
}

std::optional<std::size_t> SymbolTable::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------

ParamMonomial ParamMonomial::unit(std::size_t num_symbols) {
  return ParamMonomial{Rational(1), 0, std::vector<long>(num_symbols, 0)};
}

ParamMonomial& ParamMonomial::operator*=(const ParamMonomial& o) {
  if (sym_exps.size() != o.sym_exps.size()) throw UsageError("monomials over different symbol tables");
  coeff *= o.coeff;
  q_exp += o.q_exp;
  for (std::size_t i = 0; i < sym_exps.size(); ++i) sym_exps[i] += o.sym_exps[i];
  return *this;
}

ParamMonomial ParamMonomial::pow(long k) const {
  ParamMonomial out = unit(sym_exps.size());
  if (k < 0 && coeff.is_zero()) throw DivisionByZero("negative power of a zero monomial");
  mpq_class c = 1;
  const mpq_class base = k < 0 ? mpq_class(1 / coeff.value()) : coeff.value();
  for (long i = 0; i < (k < 0 ? -k : k); ++i) c *= base;
  out.coeff = Rational(c);
  out.q_exp = q_exp * k;
  for (std::size_t i = 0; i < sym_exps.size(); ++i) out.sym_exps[i] = sym_exps[i] * k;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool mono_less(const ParamMonomial& a, const ParamMonomial& b) {
  if (a.q_exp != b.q_exp) return a.q_exp < b.q_exp;
  if (a.sym_exps != b.sym_exps) return a.sym_exps < b.sym_exps;
  return a.coeff < b.coeff;
}

std::vector<BinomFactor> canonical(std::vector<BinomFactor> factors) {
  std::stable_sort(factors.begin(), factors.end(),
                   [](const BinomFactor& a, const BinomFactor& b) { return mono_less(a.mono, b.mono); });
  std::vector<BinomFactor> out;
  for (auto& f : factors) {
    if (!out.empty() && out.back().mono == f.mono) {
      out.back().power += f.power;
      if (out.back().power == 0) out.pop_back();
    } else if (f.power != 0) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

DegreeTerm::DegreeTerm(std::vector<long> degree, ParamMonomial prefix, std::vector<BinomFactor> factors)
    : degree_(std::move(degree)), prefix_(std::move(prefix)), factors_(canonical(std::move(factors))) {
  for (const auto& f : factors_) {
    if (f.mono.sym_exps.size() != prefix_.sym_exps.size()) {
      throw UsageError("binomial factor over a different symbol table than the prefix");
    }
  }
}

DegreeTerm DegreeTerm::with_prefix(ParamMonomial prefix) const {
  return DegreeTerm(degree_, std::move(prefix), factors_);
}

DegreeTerm operator*(const DegreeTerm& a, const DegreeTerm& b) {
  if (a.degree_.size() != b.degree_.size()) throw UsageError("degree tuples of different rank");
  std::vector<long> degree = a.degree_;
  for (std::size_t i = 0; i < degree.size(); ++i) degree[i] += b.degree_[i];
  std::vector<BinomFactor> factors = a.factors_;
  factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
  return DegreeTerm(std::move(degree), a.prefix_ * b.prefix_, std::move(factors));
}

// ---------------------------------------------------------------------------

void Specialization::validate(const SymbolTable& symbols, std::size_t num_novikov) const {
  if (series_power < 1) throw UsageError("series_power must be >= 1");
  if (sym_map.size() != symbols.size()) {
    throw UsageError("specialization covers " + std::to_string(sym_map.size()) + " symbols, model has " +
                     std::to_string(symbols.size()));
  }
  for (std::size_t i = 0; i < sym_map.size(); ++i) {
    if (!sym_map[i]) throw UsageError("symbol '" + symbols.name(i) + "' is not mapped");
  }
  if (novikov_map.size() != num_novikov) throw UsageError("Novikov variable count mismatch");
  for (std::size_t i = 0; i < novikov_map.size(); ++i) {
    if (!novikov_map[i]) throw UsageError("Novikov variable " + std::to_string(i) + " is not mapped");
  }
  for (const auto& m : sym_map) {
    if (m->c.order() != field_order) throw UsageError("symbol constant outside the specialization field");
  }
  for (const auto& m : novikov_map) {
    if (m->c.order() != field_order) throw UsageError("Novikov constant outside the specialization field");
  }
}

FinalMonomial specialize_monomial(const ParamMonomial& mono, const Specialization& spec) {
  if (mono.sym_exps.size() != spec.sym_map.size()) {
    throw UsageError("monomial and specialization disagree on the symbol count");
  }
  FinalMonomial out{CycloNum(mono.coeff, spec.field_order), mono.q_exp * spec.series_power};
  for (std::size_t i = 0; i < mono.sym_exps.size(); ++i) {
    const long k = mono.sym_exps[i];
    if (k == 0) continue;
    const auto& target = spec.sym_map[i];
    if (!target) throw UsageError("symbol " + std::to_string(i) + " is not mapped");
    out.c *= target->c.pow(k);
    out.e += target->e * k;
  }
  return out;
}

namespace {

// Term rewritten as K q^E * prod (1 - c q^m)^power with every m > 0.
struct NormalizedTerm {
  CycloNum scale;
  Exponent shift = 0;
  std::vector<std::tuple<CycloNum, Exponent, long>> binomials;
};

std::optional<NormalizedTerm> normalize(const DegreeTerm& term, const Specialization& spec) {
  const FinalMonomial pre = specialize_monomial(term.prefix(), spec);
  NormalizedTerm out{pre.c, pre.e, {}};

  if (term.degree().size() != spec.novikov_map.size()) {
    throw UsageError("degree rank does not match the Novikov map");
  }
  for (std::size_t a = 0; a < term.degree().size(); ++a) {
    const long f = term.degree()[a];
    if (f == 0) continue;
    const auto& target = spec.novikov_map[a];
    if (!target) throw UsageError("Novikov variable " + std::to_string(a) + " is not mapped");
    out.scale *= target->c.pow(f);
    out.shift += target->e * f;
  }
  if (out.scale.is_zero()) return std::nullopt;

  const CycloNum one(Rational(1), spec.field_order);
  for (const auto& factor : term.factors()) {
    FinalMonomial m = specialize_monomial(factor.mono, spec);
    if (m.c.is_zero()) continue;
    if (m.e == 0) {
      if (m.c.is_one()) {
        if (factor.power > 0) return std::nullopt;
        throw PoleError("denominator factor (1 - q^0) vanishes identically");
      }
      out.scale *= (one - m.c).pow(factor.power);
      continue;
    }
    if (m.e < 0) {
      // 1 - c q^m = (-c q^m)(1 - c^{-1} q^{-m})
      out.scale *= (-m.c).pow(factor.power);
      out.shift += m.e * factor.power;
      m = FinalMonomial{m.c.inverse(), -m.e};
    }
    out.binomials.emplace_back(m.c, m.e, factor.power);
  }
  return out;
}

// (1 - c q^m)^power to order `order`, m > 0.
QSeries binomial_power(const CycloNum& c, Exponent m, long power, Exponent order) {
  const int field = c.order();
  QSeries base(order, field);
  if (power > 0) {
    base = QSeries::one(order, field) - QSeries::monomial(c, m, order);
  } else {
    std::map<Exponent, CycloNum> geo;
    CycloNum ck(Rational(1), field);
    for (Exponent e = 0; e <= order; e += m) {
      geo.emplace(e, ck);
      ck *= c;
    }
    base = QSeries::from_terms(geo, order, field);
  }
  QSeries out = QSeries::one(order, field);
  for (long i = 0; i < (power > 0 ? power : -power); ++i) out = out * base;
  return out;
}

}  // namespace

std::optional<Exponent> min_q_order(const DegreeTerm& term, const Specialization& spec) {
  auto norm = normalize(term, spec);
  if (!norm) return std::nullopt;
  return norm->shift;
}

QSeries specialize_term(const DegreeTerm& term, const Specialization& spec, Exponent trunc) {
  auto norm = normalize(term, spec);
  if (!norm) return QSeries(trunc, spec.field_order);
  const Exponent order = trunc - norm->shift;
  if (order < 0) return QSeries(trunc, spec.field_order);

  QSeries body = QSeries::one(order, spec.field_order);
  for (const auto& [c, m, power] : norm->binomials) body = body * binomial_power(c, m, power, order);
  body *= norm->scale;
  return shift(body, norm->shift);
}

}  // namespace mockq
