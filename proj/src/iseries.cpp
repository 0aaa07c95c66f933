#include "mockq/iseries.hpp"

#include <algorithm>

namespace mockq {

std::string to_string(PrefixConvention conv) {
  return conv == PrefixConvention::PropLiteral ? "prop_literal" : "thm_detmodify";
}

PrefixConvention parse_convention(const std::string& text) {
  if (text == "prop_literal") return PrefixConvention::PropLiteral;
  if (text == "thm_detmodify") return PrefixConvention::ThmDetModify;
  throw UsageError("unknown prefix convention '" + text + "'");
}

// ---------------------------------------------------------------------------

void ChargeModel::validate() {
  if (s < 1) throw UsageError("s must be >= 1");
  if (m < 1) throw UsageError("m must be >= 1");
  if (charges.size() != static_cast<std::size_t>(s)) throw UsageError("charges must have s rows");
  for (const auto& row : charges) {
    if (row.size() != static_cast<std::size_t>(m)) throw UsageError("every charges row must have m entries");
  }
  for (const auto& r : rep_charges) {
    if (r.size() != static_cast<std::size_t>(s)) throw UsageError("every rep_charges entry must have s entries");
  }
  if (level != 0 && rep_charges.empty()) throw UsageError("rep_charges must be nonempty when level != 0");
  if (lambda_flags.empty()) lambda_flags.assign(static_cast<std::size_t>(m), true);
  if (lambda_flags.size() != static_cast<std::size_t>(m)) throw UsageError("lambda_flags must have m entries");

  if (p_names.empty()) {
    if (s == 1) {
      p_names = {"p"};
    } else {
      for (int a = 1; a <= s; ++a) p_names.push_back("p_" + std::to_string(a));
    }
  }
  if (p_names.size() != static_cast<std::size_t>(s)) throw UsageError("p_names must have s entries");

  const auto flagged = static_cast<std::size_t>(std::count(lambda_flags.begin(), lambda_flags.end(), true));
  if (lambda_names.empty()) {
    for (int rho = 0; rho < m; ++rho) {
      if (lambda_flags[static_cast<std::size_t>(rho)]) lambda_names.push_back("Lambda_" + std::to_string(rho + 1));
    }
  }
  if (lambda_names.size() != flagged) throw UsageError("lambda_names must name every flagged coordinate");

  if (novikov_names.empty()) {
    if (s == 1) {
      novikov_names = {"Q"};
    } else {
      for (int a = 1; a <= s; ++a) novikov_names.push_back("Q_" + std::to_string(a));
    }
  }
  if (novikov_names.size() != static_cast<std::size_t>(s)) throw UsageError("novikov_names must have s entries");

  if (n_max && *n_max < 0) throw UsageError("n_max must be >= 0");
  if (s > 1 && degrees.empty()) throw UsageError("models with s > 1 need an explicit degree list");
  for (const auto& f : degrees) {
    if (f.size() != static_cast<std::size_t>(s)) throw UsageError("degree tuples must have s entries");
  }
  (void)symbols();  // name uniqueness
}

SymbolTable ChargeModel::symbols() const {
  std::vector<std::string> names = p_names;
  names.insert(names.end(), lambda_names.begin(), lambda_names.end());
  return SymbolTable(std::move(names));
}

std::vector<long> coordinate_degrees(const ChargeModel& model, const std::vector<long>& f) {
  std::vector<long> beta(static_cast<std::size_t>(model.m), 0);
  for (std::size_t rho = 0; rho < beta.size(); ++rho) {
    for (std::size_t a = 0; a < f.size(); ++a) beta[rho] += model.charges[a][rho] * f[a];
  }
  return beta;
}

namespace {

bool in_enumeration(const ChargeModel& model, const std::vector<long>& f) {
  if (f.size() != static_cast<std::size_t>(model.s)) return false;
  if (std::all_of(f.begin(), f.end(), [](long x) { return x == 0; })) return true;
  if (model.s == 1 && model.degrees.empty()) {
    return f[0] >= 1 && (!model.n_max || f[0] <= *model.n_max);
  }
  return std::find(model.degrees.begin(), model.degrees.end(), f) != model.degrees.end();
}

long pair(const std::vector<long>& r, const std::vector<long>& f) {
  long out = 0;
  for (std::size_t a = 0; a < r.size(); ++a) out += r[a] * f[a];
  return out;
}

}  // namespace

DegreeTerm i_term(const ChargeModel& model, const std::vector<long>& f, PrefixConvention conv) {
  if (!in_enumeration(model, f)) throw UsageError("degree outside the model's enumeration");
  const std::size_t nsym = static_cast<std::size_t>(model.s) + model.lambda_names.size();
  const auto beta = coordinate_degrees(model, f);

  std::vector<BinomFactor> factors;
  std::size_t lambda_index = static_cast<std::size_t>(model.s);
  for (std::size_t rho = 0; rho < beta.size(); ++rho) {
    // U_rho = prod_a P_a^{Q_{a rho}} * Lambda_rho^{-1}
    ParamMonomial u = ParamMonomial::unit(nsym);
    for (std::size_t a = 0; a < static_cast<std::size_t>(model.s); ++a) u.sym_exps[a] = model.charges[a][rho];
    if (model.lambda_flags[rho]) u.sym_exps[lambda_index++] = -1;

    if (beta[rho] > 0) {
      for (long j = 1; j <= beta[rho]; ++j) {
        ParamMonomial mono = u;
        mono.q_exp = j;
        factors.push_back({mono, -1});
      }
    } else if (beta[rho] < 0) {
      for (long j = beta[rho] + 1; j <= 0; ++j) {
        ParamMonomial mono = u;
        mono.q_exp = j;
        factors.push_back({mono, 1});
      }
    }
  }

  ParamMonomial prefix = ParamMonomial::unit(nsym);
  for (const auto& r : model.rep_charges) {
    const long b = pair(r, f);
    const long sign = conv == PrefixConvention::PropLiteral ? 1 : -1;
    for (std::size_t a = 0; a < r.size(); ++a) prefix.sym_exps[a] += sign * model.level * b * r[a];
    prefix.q_exp += conv == PrefixConvention::PropLiteral ? model.level * b * (b - 1) / 2
                                                          : model.level * (b + 1) * b / 2;
  }
  return DegreeTerm(f, std::move(prefix), std::move(factors));
}

DegreeTerm det_modify(const DegreeTerm& term, const std::vector<std::vector<long>>& rep_charges, long level,
                      PrefixConvention conv) {
  const auto& f = term.degree();
  const std::size_t nsym = term.prefix().sym_exps.size();
  if (nsym < f.size()) throw UsageError("symbol table too small for the P symbols");
  ParamMonomial factor = ParamMonomial::unit(nsym);
  for (const auto& r : rep_charges) {
    if (r.size() != f.size()) throw UsageError("Chern root character rank differs from degree rank");
    const long b = pair(r, f);
    // L_i = prod_a P_a^{r_a}
    ParamMonomial chern_root = ParamMonomial::unit(nsym);
    for (std::size_t a = 0; a < r.size(); ++a) chern_root.sym_exps[a] = r[a];
    ParamMonomial root_factor = ParamMonomial::unit(nsym);
    if (conv == PrefixConvention::PropLiteral) {
      root_factor = chern_root.pow(b);
      root_factor.q_exp = b * (b - 1) / 2;
    } else {
      root_factor = chern_root.pow(-b);
      root_factor.q_exp = (b + 1) * b / 2;
    }
    factor *= root_factor.pow(level);
  }
  return term.with_prefix(term.prefix() * factor);
}

QSeries i_function(const ChargeModel& model, PrefixConvention conv, const Specialization& spec, Exponent trunc,
                   const SummationLimits& limits) {
  const SymbolTable symbols = model.symbols();
  spec.validate(symbols, model.num_novikov());

  QSeries total = QSeries::one(trunc, spec.field_order);
  auto accumulate = [&](const std::vector<long>& f) {
    const DegreeTerm term = i_term(model, f, conv);
    const auto order = min_q_order(term, spec);
    if (!order || *order > trunc) return false;
    total += specialize_term(term, spec, trunc);
    return true;
  };

  if (model.s > 1 || !model.degrees.empty()) {
    for (const auto& f : model.degrees) accumulate(f);
    return total;
  }
  if (model.n_max) {
    for (long n = 1; n <= *model.n_max; ++n) accumulate({n});
    return total;
  }
  int settled = 0;
  for (long n = 1; n <= limits.degree_cap; ++n) {
    settled = accumulate({n}) ? 0 : settled + 1;
    if (settled >= limits.settle_count) return total;
  }
  throw ConvergenceError("degree summation did not settle below q^" + std::to_string(trunc) + " within " +
                         std::to_string(limits.degree_cap) + " degrees");
}

// ---------------------------------------------------------------------------

QSeries q_hypergeometric(const std::vector<FinalMonomial>& alphas, const std::vector<FinalMonomial>& betas,
                         const FinalMonomial& z, Exponent trunc, const SummationLimits& limits) {
  const int field = z.c.order();
  const long r = static_cast<long>(alphas.size());
  const long s = static_cast<long>(betas.size());
  const long twist = 1 + s - r;
  const CycloNum one(Rational(1), field);

  QSeries total = QSeries::one(trunc, field);
  int settled = 0;
  for (long n = 1; n <= limits.degree_cap; ++n) {
    // Valuation of the n-th summand and its vanishing / pole status.
    Exponent low = n * z.e + twist * n * (n - 1) / 2;
    bool vanishes = z.c.is_zero();
    for (const auto& a : alphas) {
      for (long k = 0; k < n; ++k) {
        const Exponent m = a.e + k;
        if (m == 0 && a.c.is_one()) vanishes = true;
        if (!a.c.is_zero()) low += std::min<Exponent>(0, m);
      }
    }
    for (const auto& b : betas) {
      for (long k = 0; k < n; ++k) {
        const Exponent m = b.e + k;
        if (m == 0 && b.c.is_one()) {
          throw PoleError("(beta;q)_n vanishes at n = " + std::to_string(n));
        }
        if (!b.c.is_zero()) low += std::max<Exponent>(0, -m);
      }
    }
    if (vanishes || low > trunc) {
      if (++settled >= limits.settle_count) return total;
      continue;
    }
    settled = 0;

    // Work at increasing precision until the summand is exact to trunc.
    const Exponent target = trunc - n * z.e - twist * n * (n - 1) / 2;
    Exponent work = target;
    while (true) {
      QSeries num = QSeries::one(work, field);
      for (const auto& a : alphas) num = num * pochhammer(a.c, a.e, n, work);
      QSeries den = pochhammer(one, 1, n, work);
      for (const auto& b : betas) den = den * pochhammer(b.c, b.e, n, work);
      QSeries body = num * invert(den);
      if (body.trunc() >= target) {
        CycloNum scale = z.c.pow(n);
        if (twist * n % 2 != 0) scale = -scale;
        body *= scale;
        total += shift(body, n * z.e + twist * n * (n - 1) / 2);
        break;
      }
      work += target - body.trunc();
    }
  }
  throw ConvergenceError("q-hypergeometric summation did not settle within " +
                         std::to_string(limits.degree_cap) + " terms");
}

}  // namespace mockq
