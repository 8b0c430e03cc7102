#include "poslab/mconvex.hpp"

#include <cstdlib>
#include <set>

namespace poslab {

namespace {

std::set<Exponent> as_set(const std::vector<Exponent>& J) {
  if (J.empty()) throw Error(ErrorCode::EmptyInput, "M-convexity of an empty set");
  const std::size_t n = J.front().size();
  for (const Exponent& a : J)
    if (a.size() != n) throw Error(ErrorCode::DimensionMismatch, "exponent vectors of different lengths");
  return {J.begin(), J.end()};
}

Exponent moved(const Exponent& alpha, std::size_t minus, std::size_t plus) {
  Exponent out = alpha;
  --out[minus];
  ++out[plus];
  return out;
}

int l1_distance(const Exponent& a, const Exponent& b) {
  int d = 0;
  for (std::size_t v = 0; v < a.size(); ++v) d += std::abs(a[v] - b[v]);
  return d;
}

// g(alpha) + g(beta) >= g(alpha - e_i + e_j) + g(beta + e_i - e_j) with off-domain = +inf.
bool exchange_inequality(const std::map<Exponent, Rational>& g, const Exponent& alpha, const Exponent& beta,
                         std::size_t i, std::size_t j, const Rational& lhs) {
  auto a = g.find(moved(alpha, i, j));
  if (a == g.end()) return false;
  auto b = g.find(moved(beta, j, i));
  if (b == g.end()) return false;
  return lhs >= a->second + b->second;
}

}  // namespace

const char* convention_name(Convention c) { return c == Convention::MinPlus ? "min" : "max"; }

std::optional<Rational> DiscreteFunction::at(const Exponent& alpha) const {
  auto it = values.find(alpha);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

std::vector<Exponent> DiscreteFunction::domain() const {
  std::vector<Exponent> out;
  out.reserve(values.size());
  for (const auto& [alpha, v] : values) out.push_back(alpha);
  return out;
}

DiscreteFunction DiscreteFunction::as_min_plus() const {
  if (convention == Convention::MinPlus) return *this;
  DiscreteFunction out{n, {}, Convention::MinPlus};
  for (const auto& [alpha, v] : values) out.values.emplace(alpha, -v);
  return out;
}

Verdict is_mconvex_set(const std::vector<Exponent>& J, ExchangeMode mode) {
  const std::set<Exponent> set = as_set(J);
  const bool symmetric = mode == ExchangeMode::Symmetric;
  const char* check = symmetric ? "mconvex-set-symmetric" : "mconvex-set";
  std::uint64_t examined = 0;
  for (const Exponent& alpha : set)
    for (const Exponent& beta : set) {
      if (alpha == beta) continue;
      ++examined;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] <= beta[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < alpha.size() && !found; ++j) {
          if (alpha[j] >= beta[j]) continue;
          if (!set.count(moved(alpha, i, j))) continue;
          if (symmetric && !set.count(moved(beta, j, i))) continue;
          found = true;
        }
        if (!found)
          return Verdict::fail(check, "exchange", ExchangeViolation{alpha, beta, static_cast<int>(i)}, examined);
      }
    }
  const Exponent& first = *set.begin();
  for (const Exponent& beta : set)
    if (degree_of(beta) != degree_of(first))
      return Verdict::fail(check, "unequal-degree", DegreeMismatch{first, beta}, examined);
  return Verdict::certified(check, "exhaustive-exchange", examined);
}

ExchangeComparison compare_mconvex_set_variants(const std::vector<Exponent>& J) {
  ExchangeComparison out{is_mconvex_set(J, ExchangeMode::Basic), is_mconvex_set(J, ExchangeMode::Symmetric), false};
  out.agree = out.basic.status == out.symmetric.status;
  return out;
}

Verdict is_mconvex_function(const DiscreteFunction& mu, ExchangeMode mode) {
  if (mu.values.empty()) throw Error(ErrorCode::EmptyDomain, "M-convexity of a function with empty domain");
  for (const auto& [alpha, v] : mu.values)
    if (static_cast<int>(alpha.size()) != mu.n)
      throw Error(ErrorCode::DimensionMismatch, "exponent vector length differs from n");

  const DiscreteFunction g = mu.as_min_plus();
  const char* check = mu.convention == Convention::MinPlus ? "mconvex-function" : "mconcave-function";
  std::uint64_t examined = 0;

  if (mode == ExchangeMode::Local) {
    Verdict dom = is_mconvex_set(g.domain());
    if (!dom.ok()) {
      dom.check = check;
      dom.clause = "domain-not-mconvex";
      return dom;
    }
    examined = dom.effort;
    for (const auto& [alpha, va] : g.values)
      for (const auto& [beta, vb] : g.values) {
        if (l1_distance(alpha, beta) != 4) continue;
        ++examined;
        const Rational lhs = va + vb;
        bool found = false;
        for (std::size_t i = 0; i < alpha.size() && !found; ++i) {
          if (alpha[i] <= beta[i]) continue;
          for (std::size_t j = 0; j < alpha.size() && !found; ++j)
            if (alpha[j] < beta[j] && exchange_inequality(g.values, alpha, beta, i, j, lhs)) found = true;
        }
        if (!found) return Verdict::fail(check, "local-exchange", ExchangeViolation{alpha, beta, -1}, examined);
      }
    return Verdict::certified(check, "exhaustive-local-exchange", examined);
  }

  for (const auto& [alpha, va] : g.values)
    for (const auto& [beta, vb] : g.values) {
      if (alpha == beta) continue;
      ++examined;
      const Rational lhs = va + vb;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] <= beta[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < alpha.size() && !found; ++j)
          if (alpha[j] < beta[j] && exchange_inequality(g.values, alpha, beta, i, j, lhs)) found = true;
        if (!found)
          return Verdict::fail(check, "symmetric-exchange", ExchangeViolation{alpha, beta, static_cast<int>(i)},
                               examined);
      }
    }
  return Verdict::certified(check, "exhaustive-symmetric-exchange", examined);
}

ValuatedMatroidCheck is_valuated_matroid(const DiscreteFunction& mu) {
  if (mu.values.empty()) throw Error(ErrorCode::EmptyDomain, "valuated matroid with empty domain");
  std::vector<Mask> bases;
  int rank = -1;
  for (const auto& [alpha, v] : mu.values) {
    for (int a : alpha)
      if (a != 0 && a != 1) throw Error(ErrorCode::DomainNotBinary, "valuated matroid domain must be 0/1 vectors");
    bases.push_back(mask_of_exponent(alpha));
    if (rank < 0) rank = degree_of(alpha);
  }

  const std::vector<Exponent> dom = mu.domain();
  if (Verdict support = is_mconvex_set(dom); !support.ok()) {
    support.check = "valuated-matroid";
    support.clause = "underlying-not-matroid";
    return {std::move(support), std::nullopt};
  }

  ValuatedMatroidCheck out{is_mconvex_function(mu, ExchangeMode::Symmetric),
                           Matroid(GroundSet(mu.n), rank, std::move(bases))};
  out.verdict.check = "valuated-matroid";
  return out;
}

}  // namespace poslab
