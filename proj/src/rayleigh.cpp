#include "poslab/rayleigh.hpp"

#include <map>
#include <vector>

#include "poslab/error.hpp"

namespace poslab {

namespace {

struct Triple {
  Exponent alpha;
  int i, j;
  // Indices into the compiled derivative table.
  std::size_t base, di, dj, dij;
};

// Derivatives of f needed by a family of Rayleigh differences, compiled once and
// evaluated once per point.
class DerivativeTable {
 public:
  explicit DerivativeTable(const MultiPoly& f) : f_(f) {}

  std::size_t index_of(const Exponent& alpha) {
    auto [it, inserted] = index_.try_emplace(alpha, polys_.size());
    if (inserted) {
      polys_.emplace_back(derivative(f_, alpha));
      max_power_ = std::max(max_power_, polys_.back().max_power());
    }
    return it->second;
  }

  std::vector<Rational> evaluate_all(const RationalVector& x) const {
    const auto powers = power_table(x, std::max(max_power_, 1));
    std::vector<Rational> out;
    out.reserve(polys_.size());
    for (const CompiledPoly& p : polys_) out.push_back(p.evaluate(powers));
    return out;
  }

 private:
  const MultiPoly& f_;
  std::map<Exponent, std::size_t> index_;
  std::vector<CompiledPoly> polys_;
  int max_power_ = 0;
};

Exponent bumped(Exponent alpha, int i, int j = -1) {
  ++alpha[static_cast<std::size_t>(i)];
  if (j >= 0) ++alpha[static_cast<std::size_t>(j)];
  return alpha;
}

void require_nonnegative(const MultiPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Rayleigh test of the zero polynomial");
  for (const auto& [alpha, c] : f.terms())
    if (c < 0) throw Error(ErrorCode::NegativeCoefficientInput, "Rayleigh tests need nonnegative coefficients");
}

bool coefficientwise_nonnegative(const MultiPoly& p) {
  for (const auto& [alpha, c] : p.terms())
    if (c < 0) return false;
  return true;
}

// Nonnegative on R^n by inspection: every term is c x^(2 beta) with c >= 0.
bool even_nonnegative(const MultiPoly& p) {
  for (const auto& [alpha, c] : p.terms()) {
    if (c < 0) return false;
    for (int a : alpha)
      if (a % 2 != 0) return false;
  }
  return true;
}

struct Plan {
  std::vector<Triple> pending;  // differences that need sampling
  std::uint64_t certified = 0;
};

template <typename Certifies>
Plan plan_differences(const MultiPoly& f, const Rational& c, const std::vector<Exponent>& alphas, bool distinct,
                      DerivativeTable& table, Certifies certifies) {
  Plan plan;
  const int n = f.nvars();
  for (const Exponent& alpha : alphas)
    for (int i = 0; i < n; ++i)
      for (int j = distinct ? i + 1 : i; j < n; ++j) {
        const MultiPoly delta = rayleigh_difference_any(f, i, j, c, alpha);
        if (certifies(delta)) {
          ++plan.certified;
          continue;
        }
        plan.pending.push_back(Triple{alpha, i, j, table.index_of(alpha), table.index_of(bumped(alpha, i)),
                                      table.index_of(bumped(alpha, j)), table.index_of(bumped(alpha, i, j))});
      }
  return plan;
}

// First pending difference that is negative at x, in plan order.
std::optional<PointViolation> violation_at(const RationalVector& x, const Rational& c, const Plan& plan,
                                           const DerivativeTable& table) {
  const std::vector<Rational> v = table.evaluate_all(x);
  for (const Triple& t : plan.pending) {
    Rational delta = c * v[t.di] * v[t.dj] - v[t.base] * v[t.dij];
    if (delta < 0) return PointViolation{x, t.i, t.j, t.alpha, delta};
  }
  return std::nullopt;
}

const Rational kGrid[] = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                          Rational(1, 2), Rational(1), Rational(2)};

}  // namespace

RationalVector grid_point(std::uint64_t index, int n) {
  RationalVector x(static_cast<std::size_t>(n));
  for (int v = n - 1; v >= 0; --v) {
    x[static_cast<std::size_t>(v)] = kGrid[index % 7];
    index /= 7;
  }
  return x;
}

Verdict c_rayleigh_check(const MultiPoly& f, const Rational& c, const Sampler& sampler) {
  if (c <= 0) throw Error(ErrorCode::NonpositiveC, "Rayleigh constant must be positive");
  require_nonnegative(f);
  const PolyFacts facts = predicates(f);
  const int n = f.nvars();
  const std::string check = "c-rayleigh";

  std::vector<Exponent> alphas;
  if (facts.is_multiaffine) {
    alphas.emplace_back(static_cast<std::size_t>(n), 0);
  } else {
    for (int deg = 0; deg <= f.total_degree(); ++deg)
      for (const Exponent& alpha : dominated_exponents(facts.support, deg)) alphas.push_back(alpha);
  }

  DerivativeTable table(f);
  const Plan plan = plan_differences(f, c, alphas, facts.is_multiaffine, table, coefficientwise_nonnegative);
  if (plan.pending.empty()) return Verdict::certified(check, "coefficientwise-nonneg", plan.certified);

  std::uint64_t effort = 0;
  const RationalVector ones(static_cast<std::size_t>(n), Rational(1));
  ++effort;
  if (auto w = violation_at(ones, c, plan, table)) return Verdict::fail(check, "negative-difference", *w, effort);
  for (std::uint64_t s = 0; s < sampler.count(); ++s) {
    ++effort;
    if (auto w = violation_at(sampler.point(s, n), c, plan, table))
      return Verdict::fail(check, "negative-difference", *w, effort);
  }
  return Verdict::sampled(check, effort);
}

Verdict strongly_rayleigh_check(const MultiPoly& f, const Sampler& sampler) {
  require_nonnegative(f);
  const PolyFacts facts = predicates(f);
  if (!facts.is_multiaffine) throw Error(ErrorCode::NotMultiaffine, "strong Rayleigh test needs a multiaffine polynomial");
  const int n = f.nvars();
  const std::string check = "strongly-rayleigh";
  const Rational one(1);

  DerivativeTable table(f);
  const Plan plan = plan_differences(f, one, {Exponent(static_cast<std::size_t>(n), 0)}, true, table, even_nonnegative);
  if (plan.pending.empty()) return Verdict::certified(check, "even-coefficientwise-nonneg", plan.certified);

  std::uint64_t effort = 0;
  for (std::uint64_t s = 0; s < sampler.count(); ++s) {
    ++effort;
    if (auto w = violation_at(sampler.point(s, n), one, plan, table))
      return Verdict::fail(check, "negative-difference", *w, effort);
  }

  std::uint64_t grid = 1;
  for (int v = 0; v < n && grid <= kMaxGridPoints; ++v) grid *= 7;
  if (grid <= kMaxGridPoints)
    for (std::uint64_t g = 0; g < grid; ++g) {
      ++effort;
      if (auto w = violation_at(grid_point(g, n), one, plan, table))
        return Verdict::fail(check, "negative-difference", *w, effort);
    }
  return Verdict::sampled(check, effort);
}

}  // namespace poslab
