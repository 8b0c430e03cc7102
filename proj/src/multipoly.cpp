#include "poslab/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "poslab/error.hpp"

namespace poslab {

namespace {

void require_dimension(const MultiPoly& f, std::size_t got) {
  if (static_cast<int>(got) != f.nvars())
    throw Error(ErrorCode::DimensionMismatch, "expected a point of dimension " + std::to_string(f.nvars()) +
                                                  ", got " + std::to_string(got));
}

Integer factorial(int k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

// prod over v of alpha_v! / (alpha_v - order_v)!; zero if any alpha_v < order_v.
Integer falling_factor(const Exponent& alpha, const Exponent& order) {
  Integer out = 1;
  for (std::size_t v = 0; v < alpha.size(); ++v)
    for (int s = 0; s < order[v]; ++s) out *= alpha[v] - s;
  return out;
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxGround) throw Error(ErrorCode::BadIndex, "variable count out of range");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error(ErrorCode::BadIndex, "variable index out of range");
  Exponent alpha(static_cast<std::size_t>(nvars), 0);
  alpha[static_cast<std::size_t>(i)] = 1;
  return monomial(alpha, 1);
}

MultiPoly MultiPoly::monomial(const Exponent& alpha, const Rational& c) {
  MultiPoly p(static_cast<int>(alpha.size()));
  p.add_term(alpha, c);
  return p;
}

Rational MultiPoly::coefficient(const Exponent& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& alpha, const Rational& c) {
  if (static_cast<int>(alpha.size()) != nvars_)
    throw Error(ErrorCode::DimensionMismatch, "exponent length differs from variable count");
  for (int a : alpha)
    if (a < 0) throw Error(ErrorCode::BadIndex, "negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [alpha, c] : terms_) d = std::max(d, degree_of(alpha));
  return d;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::DimensionMismatch, "adding polynomials in different rings");
  MultiPoly out = a;
  for (const auto& [alpha, c] : b.terms_) out.add_term(alpha, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + Rational(-1) * b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::DimensionMismatch, "multiplying polynomials in different rings");
  MultiPoly out(a.nvars_);
  Exponent sum(static_cast<std::size_t>(a.nvars_));
  for (const auto& [alpha, ca] : a.terms_)
    for (const auto& [beta, cb] : b.terms_) {
      for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = alpha[v] + beta[v];
      out.add_term(sum, ca * cb);
    }
  return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
  MultiPoly out(a.nvars_);
  if (s == 0) return out;
  for (const auto& [alpha, c] : a.terms_) out.terms_.emplace(alpha, c * s);
  return out;
}

int degree_of(const Exponent& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

namespace {

void collect_below(const Exponent& top, std::size_t v, int remaining, Exponent& current, std::set<Exponent>& out) {
  if (v == top.size()) {
    if (remaining == 0) out.insert(current);
    return;
  }
  const int hi = std::min(top[v], remaining);
  for (int a = 0; a <= hi; ++a) {
    current[v] = a;
    collect_below(top, v + 1, remaining - a, current, out);
  }
  current[v] = 0;
}

}  // namespace

std::set<Exponent> dominated_exponents(const Support& support, int degree) {
  std::set<Exponent> out;
  if (degree < 0) return out;
  for (const Exponent& top : support) {
    Exponent current(top.size(), 0);
    collect_below(top, 0, degree, current, out);
  }
  return out;
}

MultiPoly partial_derivative(const MultiPoly& f, int i) {
  if (i < 0 || i >= f.nvars())
    throw Error(ErrorCode::BadIndex, "variable index " + std::to_string(i + 1) + " out of range 1.." +
                                         std::to_string(f.nvars()));
  Exponent order(static_cast<std::size_t>(f.nvars()), 0);
  order[static_cast<std::size_t>(i)] = 1;
  return derivative(f, order);
}

MultiPoly derivative(const MultiPoly& f, const Exponent& alpha) {
  if (static_cast<int>(alpha.size()) != f.nvars())
    throw Error(ErrorCode::DimensionMismatch, "derivative order has the wrong length");
  MultiPoly out(f.nvars());
  for (const auto& [beta, c] : f.terms()) {
    bool survives = true;
    for (std::size_t v = 0; v < beta.size(); ++v)
      if (beta[v] < alpha[v]) survives = false;
    if (!survives) continue;
    Exponent reduced = beta;
    for (std::size_t v = 0; v < beta.size(); ++v) reduced[v] -= alpha[v];
    out.add_term(reduced, c * falling_factor(beta, alpha));
  }
  return out;
}

Rational evaluate(const MultiPoly& f, std::span<const Rational> x) {
  require_dimension(f, x.size());
  Rational total = 0;
  for (const auto& [alpha, c] : f.terms()) {
    Rational term = c;
    for (std::size_t v = 0; v < alpha.size() && term != 0; ++v)
      if (alpha[v] > 0) term *= pow_int(x[v], static_cast<unsigned>(alpha[v]));
    total += term;
  }
  return total;
}

RationalMatrix hessian_at(const MultiPoly& f, std::span<const Rational> x) {
  require_dimension(f, x.size());
  const int n = f.nvars();
  RationalMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    const MultiPoly di = partial_derivative(f, i);
    for (int j = i; j < n; ++j) {
      const Rational v = evaluate(partial_derivative(di, j), x);
      h(i, j) = v;
      h(j, i) = v;
    }
  }
  return h;
}

PolyFacts predicates(const MultiPoly& f) {
  PolyFacts facts;
  facts.is_homogeneous = true;
  facts.is_multiaffine = true;
  facts.has_nonnegative_coeffs = true;
  std::optional<int> degree;
  for (const auto& [alpha, c] : f.terms()) {
    facts.support.insert(alpha);
    const int d = degree_of(alpha);
    if (!degree) degree = d;
    else if (*degree != d) facts.is_homogeneous = false;
    for (int a : alpha)
      if (a > 1) facts.is_multiaffine = false;
    if (c < 0) facts.has_nonnegative_coeffs = false;
  }
  // The zero polynomial is homogeneous of every degree; no single degree is reported.
  if (facts.is_homogeneous) facts.degree = degree;
  return facts;
}

MultiPoly generating_function_fJ(const std::vector<Exponent>& J) {
  if (J.empty()) throw Error(ErrorCode::EmptyJ, "generating function of an empty set");
  const int n = static_cast<int>(J.front().size());
  MultiPoly out(n);
  std::set<Exponent> seen;
  for (const Exponent& alpha : J) {
    if (static_cast<int>(alpha.size()) != n)
      throw Error(ErrorCode::DimensionMismatch, "exponent vectors of different lengths");
    if (!seen.insert(alpha).second) continue;
    Integer denom = 1;
    for (int a : alpha) denom *= factorial(a);
    out.add_term(alpha, Rational(1, denom));
  }
  return out;
}

MultiPoly rayleigh_difference_any(const MultiPoly& f, int i, int j, const Rational& c, const Exponent& alpha) {
  if (c <= 0) throw Error(ErrorCode::NonpositiveC, "Rayleigh constant must be positive");
  const int n = f.nvars();
  if (i < 0 || i >= n || j < 0 || j >= n) throw Error(ErrorCode::BadIndex, "variable index out of range");
  if (static_cast<int>(alpha.size()) != n) throw Error(ErrorCode::DimensionMismatch, "alpha has the wrong length");
  Exponent ai = alpha, aj = alpha, aij = alpha;
  ai[static_cast<std::size_t>(i)] += 1;
  aj[static_cast<std::size_t>(j)] += 1;
  aij[static_cast<std::size_t>(i)] += 1;
  aij[static_cast<std::size_t>(j)] += 1;
  return c * (derivative(f, ai) * derivative(f, aj)) - derivative(f, alpha) * derivative(f, aij);
}

MultiPoly rayleigh_difference(const MultiPoly& f, int i, int j, const Rational& c, const Exponent& alpha) {
  if (i == j) throw Error(ErrorCode::SameVariable, "Rayleigh difference needs distinct variables");
  return rayleigh_difference_any(f, i, j, c, alpha);
}

UniPoly restrict_to_line(const MultiPoly& f, std::span<const Rational> a, std::span<const Rational> b) {
  require_dimension(f, a.size());
  require_dimension(f, b.size());
  const int n = f.nvars();
  const int d = std::max(f.total_degree(), 0);
  // powers[v][p] = (a_v + t b_v)^p
  std::vector<std::vector<UniPoly>> powers(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const UniPoly lin({a[static_cast<std::size_t>(v)], b[static_cast<std::size_t>(v)]});
    auto& row = powers[static_cast<std::size_t>(v)];
    row.push_back(UniPoly::constant(1));
    for (int p = 1; p <= d; ++p) row.push_back(row.back() * lin);
  }
  UniPoly total;
  for (const auto& [alpha, c] : f.terms()) {
    UniPoly term = UniPoly::constant(c);
    for (int v = 0; v < n; ++v)
      if (alpha[static_cast<std::size_t>(v)] > 0)
        term = term * powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(alpha[static_cast<std::size_t>(v)])];
    total = total + term;
  }
  return total;
}

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [alpha, c] = *it;
    const Rational mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const bool unit_monomial = degree_of(alpha) == 0;
    if (mag != 1 || unit_monomial) out << to_string(mag);
    bool need_star = mag != 1 && !unit_monomial;
    for (std::size_t v = 0; v < alpha.size(); ++v) {
      if (alpha[v] == 0) continue;
      if (need_star) out << "*";
      out << "x" << v + 1;
      if (alpha[v] > 1) out << "^" << alpha[v];
      need_star = true;
    }
    first = false;
  }
  return out.str();
}

CompiledPoly::CompiledPoly(const MultiPoly& f) : nvars_(f.nvars()) {
  offsets_.push_back(0);
  for (const auto& [alpha, c] : f.terms()) {
    coeffs_.push_back(c);
    for (std::size_t v = 0; v < alpha.size(); ++v)
      if (alpha[v] > 0) {
        factors_.push_back({static_cast<int>(v), alpha[v]});
        max_power_ = std::max(max_power_, alpha[v]);
      }
    offsets_.push_back(factors_.size());
  }
}

Rational CompiledPoly::evaluate(const std::vector<std::vector<Rational>>& powers) const {
  Rational total = 0;
  Rational term;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    term = coeffs_[t];
    for (std::size_t k = offsets_[t]; k < offsets_[t + 1]; ++k) {
      const Factor& fac = factors_[k];
      term *= powers[static_cast<std::size_t>(fac.var)][static_cast<std::size_t>(fac.power)];
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

std::vector<std::vector<Rational>> power_table(std::span<const Rational> x, int max_power) {
  std::vector<std::vector<Rational>> table(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    auto& row = table[v];
    row.reserve(static_cast<std::size_t>(max_power) + 1);
    row.emplace_back(1);
    for (int p = 1; p <= max_power; ++p) row.push_back(row.back() * x[v]);
  }
  return table;
}

}  // namespace poslab
