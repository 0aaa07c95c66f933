#include "mockq/qlaurent.hpp"

#include <algorithm>

namespace mockq {

QSeries::QSeries(Exponent trunc, int field_order) : field_order_(field_order), trunc_(trunc) {}

QSeries QSeries::one(Exponent trunc, int field_order) {
  return monomial(CycloNum(Rational(1), field_order), 0, trunc);
}

QSeries QSeries::monomial(const CycloNum& c, Exponent exp, Exponent trunc) {
  QSeries out(trunc, c.order());
  out.add_term(exp, c);
  return out;
}

QSeries QSeries::from_terms(const std::map<Exponent, CycloNum>& terms, Exponent trunc,
                            int field_order) {
  QSeries out(trunc, field_order);
  for (const auto& [e, c] : terms) {
    if (c.order() != field_order) throw UsageError("coefficient field does not match series field");
    out.add_term(e, c);
  }
  return out;
}

QSeries QSeries::from_rational_terms(const std::map<Exponent, Rational>& terms, Exponent trunc,
                                     int field_order) {
  QSeries out(trunc, field_order);
  for (const auto& [e, c] : terms) out.add_term(e, CycloNum(c, field_order));
  return out;
}

void QSeries::add_term(Exponent exp, const CycloNum& c) {
  if (exp > trunc_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(exp, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

CycloNum QSeries::coeff(Exponent exp) const {
  if (exp > trunc_) {
    throw UsageError("coefficient of q^" + std::to_string(exp) + " is beyond truncation " +
                     std::to_string(trunc_));
  }
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? CycloNum(field_order_) : it->second;
}

Exponent QSeries::valuation_bound() const {
  return coeffs_.empty() ? trunc_ + 1 : coeffs_.begin()->first;
}

QSeries QSeries::truncated(Exponent t) const {
  if (t >= trunc_) return *this;
  QSeries out = *this;
  out.trunc_ = t;
  out.coeffs_.erase(out.coeffs_.upper_bound(t), out.coeffs_.end());
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (field_order_ != o.field_order_) throw UsageError("series field mismatch in addition");
  *this = truncated(o.trunc_);
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const CycloNum& c) {
  if (c.order() != field_order_) throw UsageError("series field mismatch in scaling");
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, v] : coeffs_) v *= c;
  return *this;
}

QSeries operator-(QSeries a) {
  for (auto& [e, v] : a.coeffs_) v = -v;
  return a;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.field_order_ != b.field_order_) throw UsageError("series field mismatch in multiplication");
  const Exponent va = a.valuation_bound();
  const Exponent vb = b.valuation_bound();
  QSeries out(std::min(a.trunc_ + vb, b.trunc_ + va), a.field_order_);
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      if (ea + eb > out.trunc_) break;
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

std::string QSeries::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      negative = c.constant().sign() < 0;
      const Rational mag = negative ? -c.constant() : c.constant();
      if (e == 0) {
        body = mag.to_string();
      } else if (!mag.is_one()) {
        body = mag.to_string() + "*";
      }
    } else {
      body = "(" + c.to_string() + ")";
      if (e != 0) body += "*";
    }
    if (e != 0) {
      body += "q";
      if (e != 1) body += "^" + std::to_string(e);
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

bool agree_to(const QSeries& a, const QSeries& b, Exponent t) {
  return !first_mismatch(a, b, t).has_value();
}

std::optional<Exponent> first_mismatch(const QSeries& a, const QSeries& b, Exponent t) {
  if (a.trunc() < t || b.trunc() < t) {
    throw UsageError("comparison at order " + std::to_string(t) + " exceeds a truncation");
  }
  auto ia = a.coeffs().begin();
  auto ib = b.coeffs().begin();
  const auto ea = a.coeffs().end();
  const auto eb = b.coeffs().end();
  while (true) {
    const bool has_a = ia != ea && ia->first <= t;
    const bool has_b = ib != eb && ib->first <= t;
    if (!has_a && !has_b) return std::nullopt;
    if (has_a && (!has_b || ia->first < ib->first)) return ia->first;
    if (has_b && (!has_a || ib->first < ia->first)) return ib->first;
    if (!(ia->second == ib->second)) return ia->first;
    ++ia;
    ++ib;
  }
}

QSeries shift(const QSeries& a, Exponent k) {
  std::map<Exponent, CycloNum> terms;
  for (const auto& [e, c] : a.coeffs()) terms.emplace_hint(terms.end(), e + k, c);
  return QSeries::from_terms(terms, a.trunc() + k, a.field_order());
}

QSeries invert(const QSeries& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of a series with no known nonzero coefficient");
  const Exponent v = a.valuation_bound();
  const CycloNum lead_inv = a.coeffs().begin()->second.inverse();
  // u = a / (lead q^v) = 1 + ..., exact to T - v.
  const Exponent order = a.trunc() - v;
  std::vector<CycloNum> u(static_cast<std::size_t>(order) + 1, CycloNum(a.field_order()));
  for (const auto& [e, c] : a.coeffs()) u[static_cast<std::size_t>(e - v)] = c * lead_inv;

  // b_0 = 1, b_n = -sum_{k=1}^n u_k b_{n-k}
  std::vector<CycloNum> b(u.size(), CycloNum(a.field_order()));
  b[0] = CycloNum(Rational(1), a.field_order());
  for (std::size_t n = 1; n < b.size(); ++n) {
    CycloNum acc(a.field_order());
    for (std::size_t k = 1; k <= n; ++k) {
      if (!u[k].is_zero() && !b[n - k].is_zero()) acc += u[k] * b[n - k];
    }
    b[n] = -acc;
  }

  std::map<Exponent, CycloNum> terms;
  for (std::size_t n = 0; n < b.size(); ++n) {
    if (!b[n].is_zero()) terms.emplace_hint(terms.end(), static_cast<Exponent>(n) - v, b[n] * lead_inv);
  }
  return QSeries::from_terms(terms, order - v, a.field_order());
}

QSeries subst_power(const QSeries& a, long d) {
  if (d < 1) throw UsageError("substitution power must be >= 1");
  std::map<Exponent, CycloNum> terms;
  for (const auto& [e, c] : a.coeffs()) terms.emplace_hint(terms.end(), e * d, c);
  return QSeries::from_terms(terms, a.trunc() * d, a.field_order());
}

QSeries pochhammer(const CycloNum& c, Exponent j0, long n, Exponent trunc) {
  if (n < 0) throw UsageError("pochhammer length must be nonnegative");
  const int order = c.order();
  // Exact Laurent polynomial product, pruned above what the remaining factors
  // could still pull back below `trunc`.
  std::map<Exponent, CycloNum> acc{{0, CycloNum(Rational(1), order)}};
  Exponent remaining_drop = 0;
  for (long i = 0; i < n; ++i) remaining_drop += std::min<Exponent>(0, j0 + i);
  const CycloNum neg_c = -c;
  for (long i = 0; i < n; ++i) {
    const Exponent shift_by = j0 + i;
    remaining_drop -= std::min<Exponent>(0, shift_by);
    const Exponent keep = trunc - remaining_drop;
    std::map<Exponent, CycloNum> next;
    auto put = [&](Exponent e, const CycloNum& v) {
      if (e > keep || v.is_zero()) return;
      auto [it, inserted] = next.try_emplace(e, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) next.erase(it);
      }
    };
    for (const auto& [e, v] : acc) {
      put(e, v);
      put(e + shift_by, v * neg_c);
    }
    acc = std::move(next);
  }
  return QSeries::from_terms(acc, trunc, order);
}

}  // namespace mockq
