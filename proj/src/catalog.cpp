#include "mockq/catalog.hpp"

#include <chrono>
#include <random>

namespace mockq {

std::string to_string(Prefactor p) {
  switch (p) {
    case Prefactor::Unit:
      return "1";
    case Prefactor::InvOneMinusQSquared:
      return "1/(1-q)^2";
    case Prefactor::InvOnePlusQPlusQSquared:
      return "1/(1+q+q^2)";
    case Prefactor::QOverOneMinusQ:
      return "q/(1-q)";
    case Prefactor::InvOneMinusQ:
      return "1/(1-q)";
  }
  return "?";
}

QSeries prefactor_series(Prefactor p, Exponent trunc, int field_order) {
  const auto poly = [&](std::map<Exponent, Rational> terms) {
    return QSeries::from_rational_terms(terms, trunc, field_order);
  };
  switch (p) {
    case Prefactor::Unit:
      return QSeries::one(trunc, field_order);
    case Prefactor::InvOneMinusQSquared: {
      const QSeries inv = invert(poly({{0, 1}, {1, -1}}));
      return inv * inv;
    }
    case Prefactor::InvOnePlusQPlusQSquared:
      return invert(poly({{0, 1}, {1, 1}, {2, 1}}));
    case Prefactor::QOverOneMinusQ:
      return shift(invert(poly({{0, 1}, {1, -1}})), 1).truncated(trunc);
    case Prefactor::InvOneMinusQ:
      return invert(poly({{0, 1}, {1, -1}}));
  }
  throw UsageError("unknown prefactor");
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kField = CycloNum::kDefaultOrder;

FinalMonomial mono(const CycloNum& c, Exponent e) { return FinalMonomial{c, e}; }
FinalMonomial mono(long c, Exponent e) { return FinalMonomial{CycloNum(Rational(c), kField), e}; }

ChargeModel line_model(long rep_sign, long level) {
  ChargeModel m;
  m.s = 1;
  m.m = 1;
  m.charges = {{1}};
  m.rep_charges = {{rep_sign}};
  m.level = level;
  m.lambda_flags = {true};
  m.lambda_names = {"lambda"};
  m.validate();
  return m;
}

ChargeModel plane_model(long rep_sign, long level) {
  ChargeModel m;
  m.s = 1;
  m.m = 2;
  m.charges = {{1, 1}};
  m.rep_charges = {{rep_sign}};
  m.level = level;
  m.lambda_flags = {true, true};
  m.lambda_names = {"lambda_1", "lambda_2"};
  m.validate();
  return m;
}

ChargeModel order7_model() {
  ChargeModel m;
  m.s = 1;
  m.m = 2;
  m.charges = {{2, -1}};
  m.rep_charges = {{1}};
  m.level = 3;
  m.lambda_flags = {true, true};
  m.lambda_names = {"lambda", "mu"};
  m.validate();
  return m;
}

Specialization make_spec(long series_power, std::vector<FinalMonomial> symbols, FinalMonomial q) {
  Specialization s;
  s.field_order = kField;
  s.series_power = series_power;
  for (auto& m : symbols) s.sym_map.emplace_back(std::move(m));
  s.novikov_map.emplace_back(std::move(q));
  return s;
}

IdentitySpec make(std::string name, std::string group, std::string description, std::string classical,
                  ChargeModel model, Specialization spec, Prefactor prefactor = Prefactor::Unit, int rhs_start = 0) {
  IdentitySpec id;
  id.rhs_oracle = "rhs." + name;
  id.name = std::move(name);
  id.group = std::move(group);
  id.description = std::move(description);
  id.classical = std::move(classical);
  id.model = std::move(model);
  id.spec = std::move(spec);
  id.prefactor = prefactor;
  id.rhs_start = rhs_start;
  return id;
}

std::vector<IdentitySpec> build_registry() {
  const CycloNum z = zeta(kField);
  const CycloNum z2 = z.pow(2);
  const auto p1 = mono(1, 0);
  std::vector<IdentitySpec> out;

  out.push_back(make("prop1.order3.a", "prop1",
                     "I^{St,l=1}_X(q^2,Q)|{lambda=-1,Q=q} = 1 + sum q^{n^2}/((1+q^2)...(1+q^{2n}))",
                     "third order phi(q)", line_model(1, 1), make_spec(2, {p1, mono(-1, 0)}, mono(1, 1))));
  out.push_back(make("prop1.order3.b", "prop1",
                     "I^{St,l=1}_X(q^2,Q)|{lambda=q,Q=q} = 1 + sum q^{n^2}/((1-q)(1-q^3)...(1-q^{2n-1}))",
                     "1 + psi(q), third order", line_model(1, 1), make_spec(2, {p1, mono(1, 1)}, mono(1, 1))));
  out.push_back(make("prop1.order3.c", "prop1",
                     "I^{St,l=1}_X(q^2,Q)|{lambda=-q,Q=1} = 1 + sum q^{n(n-1)}/((1+q)(1+q^3)...(1+q^{2n-1}))",
                     "1 + nu(q), third order", line_model(1, 1), make_spec(2, {p1, mono(-1, 1)}, mono(1, 0))));
  out.push_back(make("prop1.order5.a", "prop1",
                     "I^{St,l=2}_X(q,Q)|{lambda=-1,Q=q} = 1 + sum q^{n^2}/((1+q)...(1+q^n))",
                     "fifth order f0(q)", line_model(1, 2), make_spec(1, {p1, mono(-1, 0)}, mono(1, 1))));
  out.push_back(make("prop1.order5.b", "prop1",
                     "I^{St,l=2}_X(q^2,Q)|{lambda=q,Q=q^2} = 1 + sum q^{2n^2}/((1-q)(1-q^3)...(1-q^{2n-1}))",
                     "fifth order F0(q)", line_model(1, 2), make_spec(2, {p1, mono(1, 1)}, mono(1, 2))));
  out.push_back(make("prop1.order5.c", "prop1",
                     "I^{St^v,l=2}_X(q,Q)|{lambda=-1,Q=1} = 1 + sum q^{n(n+1)}/((1+q)...(1+q^n))",
                     "fifth order f1(q)", line_model(-1, 2), make_spec(1, {p1, mono(-1, 0)}, mono(1, 0))));
  out.push_back(make("prop1.order5.d", "prop1",
                     "I^{St^v,l=2}_X(q^2,Q)|{lambda=q,Q=1} = 1 + sum q^{2n^2+2n}/((1-q)(1-q^3)...(1-q^{2n-1}))",
                     "", line_model(-1, 2), make_spec(2, {p1, mono(1, 1)}, mono(1, 0))));

  out.push_back(make("prop2.order3.a", "prop2",
                     "I^{St,l=2}_{X_{1,1}}(q,Q)|{p=1,lambda_1=lambda_2=-1,Q=q} = 1 + sum q^{n^2}/((1+q)...(1+q^n))^2",
                     "third order f(q)", plane_model(1, 2),
                     make_spec(1, {p1, mono(-1, 0), mono(-1, 0)}, mono(1, 1))));
  out.push_back(make("prop2.order3.b", "prop2",
                     "I^{St,l=2}_{X_{1,1}}(q,Q)|{p=1,lambda_1=(1+sqrt(3)i)/2,lambda_2=(1-sqrt(3)i)/2,Q=q} = "
                     "1 + sum q^{n^2}/((1-q+q^2)...(1-q^n+q^{2n}))",
                     "third order chi(q)", plane_model(1, 2),
                     make_spec(1, {p1, mono(z, 0), mono(z.conj(), 0)}, mono(1, 1))));
  out.push_back(make("prop2.order3.c", "prop2",
                     "1/(1-q)^2 I^{St^v,l=2}_{X_{1,1}}(q^2,Q)|{p=1,lambda_1=lambda_2=q^-1,Q=1} = "
                     "sum_{n>=0} q^{2n^2+2n}/((1-q)(1-q^3)...(1-q^{2n+1}))^2",
                     "third order omega(q)", plane_model(-1, 2),
                     make_spec(2, {p1, mono(1, -1), mono(1, -1)}, mono(1, 0)), Prefactor::InvOneMinusQSquared));
  out.push_back(make("prop2.order3.d", "prop2",
                     "1/(1+q+q^2) I^{St^v,l=2}_{X_{1,1}}(q^2,Q)|{p=1,lambda_1=(-1+sqrt(3)i)/2 q^-1,"
                     "lambda_2=(-1-sqrt(3)i)/2 q^-1,Q=1} = sum_{n>=0} q^{2n^2+2n}/((1+q+q^2)...(1+q^{2n+1}+q^{4n+2}))",
                     "third order rho(q)", plane_model(-1, 2),
                     make_spec(2, {p1, mono(z2, -1), mono(z2.conj(), -1)}, mono(1, 0)),
                     Prefactor::InvOnePlusQPlusQSquared));

  out.push_back(make("prop3.order7.a", "prop3",
                     "I^{St,l=3}_{X_{2,-1}}(q,Q)|{p=1,lambda=1,mu=q,Q=-q^2} = 1 + sum q^{n^2}/((1-q^{n+1})...(1-q^{2n}))",
                     "seventh order F0(q)", order7_model(),
                     make_spec(1, {p1, mono(1, 0), mono(1, 1)}, mono(-1, 2))));
  out.push_back(make("prop3.order7.b", "prop3",
                     "q/(1-q) I^{St,l=3}_{X_{2,-1}}(q,Q)|{p=1,lambda=q^-1,mu=q,Q=-q^4} = "
                     "sum_{n>=1} q^{n^2}/((1-q^n)...(1-q^{2n-1}))",
                     "seventh order F1(q)", order7_model(),
                     make_spec(1, {p1, mono(1, -1), mono(1, 1)}, mono(-1, 4)), Prefactor::QOverOneMinusQ, 1));
  out.push_back(make("prop3.order7.c", "prop3",
                     "1/(1-q) I^{St,l=3}_{X_{2,-1}}(q,Q)|{p=1,lambda=q^-1,mu=q,Q=-q^3} = "
                     "sum_{n>=1} q^{n^2-n}/((1-q^n)...(1-q^{2n-1}))",
                     "seventh order F2(q)", order7_model(),
                     make_spec(1, {p1, mono(1, -1), mono(1, 1)}, mono(-1, 3)), Prefactor::InvOneMinusQ, 1));
  return out;
}

}  // namespace

const std::vector<IdentitySpec>& identities() {
  static const std::vector<IdentitySpec> registry = build_registry();
  return registry;
}

std::optional<IdentitySpec> find_identity(const std::string& name) {
  for (const auto& id : identities()) {
    if (id.name == name) return id;
  }
  return std::nullopt;
}

std::vector<IdentityListing> list_identities() {
  std::vector<IdentityListing> out;
  for (const auto& id : identities()) out.push_back({id.name, id.group, id.description});
  out.push_back({kHypergeometricFamily, "prop4",
                 "I^{St,l=1+s}_{X_{1,-1}}(q)|{p=1,lambda_i^-1 q=beta_i,mu_j=alpha_j,Q=(-1)^{1+s} z prod mu_j} = "
                 "r phi s(alpha; beta; z), randomized over (r,s) in {(1,1),(2,1),(1,2)}"});
  return out;
}

// ---------------------------------------------------------------------------

namespace {

VerifyReport compare(std::string name, const QSeries& lhs, const QSeries& rhs, Exponent trunc) {
  VerifyReport report;
  report.name = std::move(name);
  report.trunc = trunc;
  const auto at = first_mismatch(lhs, rhs, trunc);
  report.pass = !at.has_value();
  if (at) report.first_mismatch = Mismatch{*at, lhs.coeff(*at).to_string(), rhs.coeff(*at).to_string()};
  return report;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

VerifyReport verify_identity(const IdentitySpec& id, Exponent trunc) {
  const auto start = std::chrono::steady_clock::now();
  const QSeries lhs =
      prefactor_series(id.prefactor, trunc, id.spec.field_order) * i_function(id.model, id.convention, id.spec, trunc);
  const QSeries rhs = mock_theta(id.rhs_oracle, trunc);
  VerifyReport report = compare(id.name, lhs, rhs, trunc);
  report.elapsed_ms = millis_since(start);
  return report;
}

ChargeModel hypergeometric_model(int r, int s) {
  if (r < 0 || s < 0) throw UsageError("r and s must be nonnegative");
  ChargeModel m;
  m.s = 1;
  m.m = s + 1 + r;
  m.charges.assign(1, {});
  for (int i = 0; i < s + 1; ++i) m.charges[0].push_back(1);
  for (int j = 0; j < r; ++j) m.charges[0].push_back(-1);
  m.rep_charges = {{1}};
  m.level = 1 + s;
  m.lambda_flags.assign(static_cast<std::size_t>(m.m), true);
  for (int i = 1; i <= s + 1; ++i) m.lambda_names.push_back("lambda_" + std::to_string(i));
  for (int j = 1; j <= r; ++j) m.lambda_names.push_back("mu_" + std::to_string(j));
  m.validate();
  return m;
}

Specialization hypergeometric_specialization(const std::vector<FinalMonomial>& alphas,
                                             const std::vector<FinalMonomial>& betas, const FinalMonomial& z) {
  const int field = z.c.order();
  Specialization spec;
  spec.field_order = field;
  spec.series_power = 1;
  spec.sym_map.emplace_back(FinalMonomial{CycloNum(Rational(1), field), 0});  // p
  for (const auto& b : betas) spec.sym_map.emplace_back(FinalMonomial{b.c.inverse(), 1 - b.e});
  spec.sym_map.emplace_back(FinalMonomial{CycloNum(Rational(1), field), 0});
  for (const auto& a : alphas) spec.sym_map.emplace_back(a);

  FinalMonomial q = z;
  if ((1 + betas.size()) % 2 != 0) q.c = -q.c;
  for (const auto& a : alphas) {
    q.c *= a.c;
    q.e += a.e;
  }
  spec.novikov_map.emplace_back(q);
  return spec;
}

std::vector<HypergeometricTrial> hypergeometric_trials(int r, int s, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 5);
  std::uniform_int_distribution<long> zexp(1, 2);
  const auto rational = [&](bool avoid_one) {
    while (true) {
      const Rational v(num(rng), den(rng));
      if (v.is_zero() || (avoid_one && v.is_one())) continue;
      return CycloNum(v, kField);
    }
  };
  std::vector<HypergeometricTrial> out;
  for (int t = 0; t < count; ++t) {
    HypergeometricTrial trial{{}, {}, FinalMonomial{CycloNum(kField), 0}};
    for (int i = 0; i < r; ++i) trial.alphas.push_back({rational(true), 0});
    for (int i = 0; i < s; ++i) trial.betas.push_back({rational(true), 0});
    trial.z = FinalMonomial{rational(false), zexp(rng)};
    out.push_back(std::move(trial));
  }
  return out;
}

VerifyReport verify_hypergeometric(const HypergeometricTrial& trial, Exponent trunc, const std::string& name) {
  const auto start = std::chrono::steady_clock::now();
  const int r = static_cast<int>(trial.alphas.size());
  const int s = static_cast<int>(trial.betas.size());
  const QSeries lhs = i_function(hypergeometric_model(r, s), PrefixConvention::PropLiteral,
                                 hypergeometric_specialization(trial.alphas, trial.betas, trial.z), trunc);
  const QSeries rhs = q_hypergeometric(trial.alphas, trial.betas, trial.z, trunc);
  VerifyReport report = compare(name, lhs, rhs, trunc);
  report.elapsed_ms = millis_since(start);
  return report;
}

std::vector<VerifyReport> verify_hypergeometric_family(std::uint64_t seed, int per_shape, Exponent trunc) {
  static constexpr std::pair<int, int> kShapes[] = {{1, 1}, {2, 1}, {1, 2}};
  std::vector<VerifyReport> out;
  std::uint64_t shape_seed = seed;
  for (const auto& [r, s] : kShapes) {
    const auto trials = hypergeometric_trials(r, s, per_shape, shape_seed++);
    for (std::size_t t = 0; t < trials.size(); ++t) {
      const std::string name = std::string(kHypergeometricFamily) + ".r" + std::to_string(r) + "s" +
                               std::to_string(s) + "." + std::to_string(t);
      out.push_back(verify_hypergeometric(trials[t], trunc, name));
    }
  }
  return out;
}

}  // namespace mockq
