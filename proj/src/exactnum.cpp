#include "mockq/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace mockq {

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw UsageError("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw UsageError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw DivisionByZero("rational literal with zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of rational zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(); }

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

using IntPoly = std::vector<long>;
using RatPoly = std::vector<Rational>;

// Exact division of integer polynomials; divisor is monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

IntPoly compute_cyclotomic(int order) {
  // x^N - 1 divided by Phi_d for every proper divisor d.
  IntPoly p(static_cast<std::size_t>(order) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(order)] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  return p;
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Long division over Q; divisor must be nonzero (trimmed).
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly num, const RatPoly& den) {
  trim(num);
  if (num.size() < den.size()) return {{}, num};
  const std::size_t dn = den.size() - 1;
  const Rational lead_inv = den.back().inverse();
  RatPoly quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    if (num[i].is_zero()) continue;
    const Rational c = num[i] * lead_inv;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  num.resize(dn);
  trim(num);
  trim(quot);
  return {quot, num};
}

RatPoly as_rat_poly(const IntPoly& p) {
  RatPoly out;
  out.reserve(p.size());
  for (long c : p) out.emplace_back(c);
  return out;
}

// In-place reduction modulo a monic integer polynomial; result padded to deg(phi).
void reduce_mod(RatPoly& p, const IntPoly& phi) {
  const std::size_t k = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > k;) {
    if (p[i].is_zero()) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j < k; ++j) {
      if (phi[j] != 0) p[i - k + j] -= c * Rational(phi[j]);
    }
    p[i] = Rational();
  }
  p.resize(k);
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int order) {
  if (order < 1) throw UsageError("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<IntPoly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return *it->second;
  }
  // Recursion into smaller orders happens outside the lock.
  auto poly = std::make_unique<IntPoly>(order == 1 ? IntPoly{-1, 1} : compute_cyclotomic(order));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(order, std::move(poly));
  return *it->second;
}

int euler_phi(int order) {
  if (order < 1) throw UsageError("cyclotomic order must be positive");
  int result = order;
  int n = order;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// ---------------------------------------------------------------------------
// CycloNum

CycloNum::CycloNum(int order) : order_(order), coords_(static_cast<std::size_t>(euler_phi(order))) {}

CycloNum::CycloNum(const Rational& value, int order) : CycloNum(order) { coords_[0] = value; }

CycloNum CycloNum::from_poly(std::vector<Rational> poly, int order) {
  CycloNum out(order);
  reduce_mod(poly, cyclotomic_polynomial(order));
  out.coords_ = std::move(poly);
  return out;
}

CycloNum CycloNum::from_coords(std::vector<Rational> coords, int order) {
  if (coords.size() != static_cast<std::size_t>(euler_phi(order))) {
    throw UsageError("Q(zeta_" + std::to_string(order) + ") needs exactly " +
                     std::to_string(euler_phi(order)) + " coordinates, got " +
                     std::to_string(coords.size()));
  }
  CycloNum out(order);
  out.coords_ = std::move(coords);
  return out;
}

bool CycloNum::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool CycloNum::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

bool CycloNum::is_one() const { return is_rational() && coords_[0].is_one(); }

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (order_ != o.order_) throw UsageError("cyclotomic order mismatch in addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  if (order_ != o.order_) throw UsageError("cyclotomic order mismatch in subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  if (order_ != o.order_) throw UsageError("cyclotomic order mismatch in multiplication");
  if (coords_.size() == 1) {
    coords_[0] *= o.coords_[0];
    return *this;
  }
  RatPoly prod(2 * coords_.size() - 1);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coords_.size(); ++j) {
      if (!o.coords_[j].is_zero()) prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  reduce_mod(prod, cyclotomic_polynomial(order_));
  coords_ = std::move(prod);
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& o) {
  for (auto& c : coords_) c *= o;
  return *this;
}

CycloNum operator-(CycloNum a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.order_ != b.order_) throw UsageError("cannot compare elements of different cyclotomic fields");
  return a.coords_ == b.coords_;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of cyclotomic zero");
  if (is_rational()) return CycloNum(coords_[0].inverse(), order_);
  // Extended Euclid in Q[x]: track s with s*a = r (mod Phi).
  RatPoly r0 = as_rat_poly(cyclotomic_polynomial(order_));
  RatPoly r1 = coords_;
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_N is irreducible, so the gcd r0 is a nonzero constant.
  const Rational scale = r0.front().inverse();
  for (auto& c : s0) c *= scale;
  return from_poly(std::move(s0), order_);
}

CycloNum CycloNum::pow(long exponent) const {
  CycloNum base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  CycloNum result(Rational(1), order_);
  while (e != 0) {
    if ((e & 1UL) != 0) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

CycloNum CycloNum::conj() const {
  // z^k -> z^{N-k}
  RatPoly poly(static_cast<std::size_t>(order_) + 1);
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    poly[k == 0 ? 0 : static_cast<std::size_t>(order_) - k] += coords_[k];
  }
  return from_poly(std::move(poly), order_);
}

std::string CycloNum::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += "z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

CycloNum CycloNum::parse(std::string_view text, int order) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw UsageError("empty cyclotomic literal");
  auto fail = [&]() {
    return UsageError("malformed cyclotomic literal '" + std::string(text) + "'");
  };

  RatPoly poly;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw fail();
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw fail();
    pos = end;

    Rational coeff(1);
    std::size_t power = 0;
    const auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      coeff = Rational::parse(term);
    } else {
      if (zpos > 0) {
        if (term[zpos - 1] != '*') throw fail();
        coeff = Rational::parse(term.substr(0, zpos - 1));
      }
      const std::string rest = term.substr(zpos + 1);
      if (rest.empty()) {
        power = 1;
      } else {
        if (rest[0] != '^' || rest.size() < 2 ||
            !std::all_of(rest.begin() + 1, rest.end(),
                         [](unsigned char c) { return std::isdigit(c); })) {
          throw fail();
        }
        power = std::stoul(rest.substr(1));
      }
    }
    if (negative) coeff = -coeff;
    if (poly.size() <= power) poly.resize(power + 1);
    poly[power] += coeff;
  }
  if (poly.size() < static_cast<std::size_t>(euler_phi(order))) {
    poly.resize(static_cast<std::size_t>(euler_phi(order)));
  }
  return from_poly(std::move(poly), order);
}

CycloNum zeta(int order) {
  if (order < 1) throw UsageError("root of unity order must be positive");
  return CycloNum::from_poly({Rational(0), Rational(1)}, order);
}

}  // namespace mockq
