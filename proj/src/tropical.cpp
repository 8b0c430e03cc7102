#include "poslab/tropical.hpp"

#include <algorithm>
#include <array>

#include "poslab/error.hpp"
#include "poslab/lorentzian.hpp"
#include "poslab/positroid.hpp"

namespace poslab {

namespace {

using Value = std::optional<Rational>;  // nullopt is the infinite element

Value sum(const Value& a, const Value& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

// Optimum of the finite values and how often it is attained.
std::pair<Value, int> optimum(std::span<const Value> values, Convention convention) {
  Value best;
  int hits = 0;
  for (const Value& v : values) {
    if (!v) continue;
    const bool better = !best || (convention == Convention::MinPlus ? *v < *best : *v > *best);
    if (better) {
      best = v;
      hits = 1;
    } else if (*v == *best) {
      ++hits;
    }
  }
  return {best, hits};
}

std::array<Value, 3> three_products(const WeightVector& mu, Mask s, const std::array<int, 4>& q) {
  auto w = [&](int x, int y) { return mu.at(s | bit(q[static_cast<std::size_t>(x)]) | bit(q[static_cast<std::size_t>(y)])); };
  return {sum(w(0, 1), w(2, 3)), sum(w(0, 2), w(1, 3)), sum(w(0, 3), w(1, 2))};
}

// Calls visit(S, quad) over all relations in lexicographic order until it returns false.
template <typename Visit>
void for_each_relation(int n, int k, Visit visit) {
  if (k < 2 || k + 2 > n) return;
  for (Mask s : k_subsets(n, k - 2))
    for (Mask quad : k_subsets(n, 4, ~s)) {
      const std::vector<int> e = elements(quad);
      if (!visit(s, std::array<int, 4>{e[0], e[1], e[2], e[3]})) return;
    }
}

}  // namespace

std::optional<Rational> WeightVector::at(Mask s) const {
  auto it = values.find(s);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

WeightVector WeightVector::as_min_plus() const {
  if (convention == Convention::MinPlus) return *this;
  return dual_view();
}

WeightVector WeightVector::dual_view() const {
  WeightVector out{n, convention == Convention::MinPlus ? Convention::MaxPlus : Convention::MinPlus, {}};
  for (const auto& [s, v] : values) out.values.emplace(s, -v);
  return out;
}

DiscreteFunction WeightVector::as_function() const {
  DiscreteFunction out{n, {}, convention};
  for (const auto& [s, v] : values) out.values.emplace(indicator(s, n), v);
  return out;
}

Matroid WeightVector::support_matroid(const GroundSet& ground) const {
  if (values.empty()) throw Error(ErrorCode::EmptyBases, "weight vector has no finite entries");
  std::vector<Mask> bases;
  for (const auto& [s, v] : values) bases.push_back(s);
  const int rank = cardinality(bases.front());
  return Matroid(ground, rank, std::move(bases));
}

WeightVector zero_weights(const Matroid& m, Convention convention) {
  WeightVector out{m.size(), convention, {}};
  for (Mask b : m.bases()) out.values.emplace(b, Rational(0));
  return out;
}

Tropicalization tropicalize(const PuiseuxMultiPoly& f) {
  Tropicalization out{{f.nvars, {}, Convention::MinPlus}, {f.nvars, {}, Convention::MaxPlus}, {}};
  for (const auto& [alpha, c] : f.terms) {
    if (c.is_zero()) throw Error(ErrorCode::ZeroCoefficientStored, "zero coefficient stored at a monomial");
    out.min_plus.values.emplace(alpha, c.ord());
    out.max_plus.values.emplace(alpha, -c.ord());
    out.leading_sign.emplace(alpha, sgn(c.leading_coefficient()));
  }
  return out;
}

void require_support(const Matroid& m, const WeightVector& mu) {
  if (mu.n != m.size()) throw Error(ErrorCode::SupportMismatch, "weights and matroid have different ground sets");
  if (mu.values.size() != m.basis_count())
    throw Error(ErrorCode::SupportMismatch, "weights are finite on " + std::to_string(mu.values.size()) +
                                                " sets but the matroid has " + std::to_string(m.basis_count()) +
                                                " bases");
  for (const auto& [s, v] : mu.values)
    if (!m.is_basis(s)) throw Error(ErrorCode::SupportMismatch, "finite weight on non-basis " + m.ground().format(s));
}

Verdict is_in_dressian(const Matroid& m, const WeightVector& mu) {
  require_support(m, mu);
  std::uint64_t effort = 0;
  std::optional<RelationViolation> violation;
  for_each_relation(m.size(), m.rank(), [&](Mask s, const std::array<int, 4>& q) {
    ++effort;
    const auto products = three_products(mu, s, q);
    const auto [best, hits] = optimum(products, mu.convention);
    if (best && hits < 2) {
      violation = RelationViolation{s, q, {products[0], products[1], products[2]}};
      return false;
    }
    return true;
  });
  if (violation) return Verdict::fail("dressian", "three-term-relation", *violation, effort);
  return Verdict::certified("dressian", "three-term-relations", effort);
}

Verdict is_in_positive_dressian(const Matroid& m, const WeightVector& mu) {
  require_support(m, mu);
  if (!is_positroid(m).ok()) throw Error(ErrorCode::NotAPositroid, "positive Dressian needs a positroid support");
  std::uint64_t effort = 0;
  std::optional<RelationViolation> violation;
  for_each_relation(m.size(), m.rank(), [&](Mask s, const std::array<int, 4>& q) {
    ++effort;
    const auto products = three_products(mu, s, q);
    const std::array<Value, 2> outer{products[0], products[2]};
    if (optimum(outer, mu.convention).first != products[1]) {
      violation = RelationViolation{s, q, {products[0], products[1], products[2]}};
      return false;
    }
    return true;
  });
  if (violation) return Verdict::fail("positive-dressian", "positive-three-term-relation", *violation, effort);
  return Verdict::certified("positive-dressian", "positive-three-term-relations", effort);
}

PuiseuxMultiPoly lift_to_lorentzian(const Matroid& m, const WeightVector& mu) {
  if (!is_in_dressian(m, mu).ok())
    throw Error(ErrorCode::NotValuated, "weights violate a tropical three-term Plücker relation");
  const WeightVector canonical = mu.as_min_plus();
  PuiseuxMultiPoly f{m.size(), {}};
  for (const auto& [b, v] : canonical.values) f.terms.emplace(indicator(b, m.size()), PuiseuxPoly::monomial(1, v));
  return f;
}

LorentzianSchedule lorentzian_schedule(const PuiseuxMultiPoly& f, int steps) {
  LorentzianSchedule out;
  Rational t0 = 1;
  for (int m = 1; m <= steps; ++m) {
    t0 /= 2;
    out.entries.push_back({t0, is_lorentzian(f.evaluate(t0))});
  }
  const std::size_t size = out.entries.size();
  out.stable = size >= 3 && out.entries[size - 1].verdict.status == out.entries[size - 2].verdict.status &&
               out.entries[size - 2].verdict.status == out.entries[size - 3].verdict.status;
  return out;
}

Verdict is_valuated_flag(const FlagChain& chain) {
  const auto& parts = chain.constituents;
  if (parts.size() < 2) throw Error(ErrorCode::ChainTooShort, "a flag needs at least two constituents");
  const int n = parts.front().matroid.size();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].matroid.size() != n) throw Error(ErrorCode::InvalidChain, "constituents on different ground sets");
    if (i > 0 && parts[i].matroid.rank() <= parts[i - 1].matroid.rank())
      throw Error(ErrorCode::InvalidChain, "constituent ranks must increase strictly");
    if (!is_in_dressian(parts[i].matroid, parts[i].weights).ok())
      throw Error(ErrorCode::ConstituentNotValuated, "constituent " + std::to_string(i + 1) + " is not valuated");
  }

  std::vector<WeightVector> canonical;
  for (const auto& part : parts) canonical.push_back(part.weights.as_min_plus());

  std::uint64_t effort = 0;
  for (std::size_t level = 0; level + 1 < parts.size(); ++level) {
    const WeightVector& lower = canonical[level];
    const WeightVector& upper = canonical[level + 1];
    const int r = parts[level].matroid.rank();
    const int s = parts[level + 1].matroid.rank();
    if (r < 1 || s + 1 > n) continue;
    const std::vector<Mask> ts = k_subsets(n, s + 1);
    for (Mask smask : k_subsets(n, r - 1))
      for (Mask t : ts) {
        ++effort;
        std::vector<IncidenceTerm> terms;
        std::vector<Value> values;
        for (int j : elements(t & ~smask)) {
          Value v = sum(lower.at(smask | bit(j)), upper.at(t & ~bit(j)));
          terms.push_back({j, v});
          values.push_back(v);
        }
        const auto [best, hits] = optimum(values, Convention::MinPlus);
        if (best && hits < 2)
          return Verdict::fail("valuated-flag", "incidence-relation", IncidenceViolation{level, smask, t, terms}, effort);
      }
  }
  return Verdict::certified("valuated-flag", "incidence-relations", effort);
}

std::vector<PuiseuxMultiPoly> flag_lorentzian_lift(const FlagChain& chain) {
  if (!is_valuated_flag(chain).ok())
    throw Error(ErrorCode::NotValuatedFlag, "chain violates a tropical incidence relation");
  std::vector<PuiseuxMultiPoly> out;
  for (const auto& part : chain.constituents) out.push_back(lift_to_lorentzian(part.matroid, part.weights));
  return out;
}

}  // namespace poslab
