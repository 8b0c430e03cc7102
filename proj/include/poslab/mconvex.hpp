#pragma once

#include <map>
#include <optional>
#include <vector>

#include "poslab/matroid.hpp"
#include "poslab/verdict.hpp"

namespace poslab {

// MinPlus: values are read as an M-convex candidate (off-domain = +inf).
// MaxPlus: values are read as an M-concave candidate (off-domain = -inf).
enum class Convention { MinPlus, MaxPlus };

const char* convention_name(Convention c);

struct DiscreteFunction {
  int n = 0;
  std::map<Exponent, Rational> values;  // finite values; keys form the effective domain
  Convention convention = Convention::MinPlus;

  std::optional<Rational> at(const Exponent& alpha) const;
  std::vector<Exponent> domain() const;
  // Same function in MinPlus orientation (values negated when MaxPlus).
  DiscreteFunction as_min_plus() const;
};

enum class ExchangeMode {
  Basic,      // alpha - e_i + e_j stays in the set
  Symmetric,  // additionally beta + e_i - e_j stays in the set / symmetric inequality
  Local,      // functions only: exchange restricted to |alpha - beta|_1 = 4
};

// Throws EmptyInput / DimensionMismatch. Local mode is treated as Basic.
Verdict is_mconvex_set(const std::vector<Exponent>& J, ExchangeMode mode = ExchangeMode::Basic);

struct ExchangeComparison {
  Verdict basic;
  Verdict symmetric;
  bool agree = false;
};

ExchangeComparison compare_mconvex_set_variants(const std::vector<Exponent>& J);

// Symmetric (default) or Local exchange test of the function in its convention.
// Local mode first requires an M-convex domain. Throws EmptyDomain.
Verdict is_mconvex_function(const DiscreteFunction& mu, ExchangeMode mode = ExchangeMode::Symmetric);

struct ValuatedMatroidCheck {
  Verdict verdict;
  std::optional<Matroid> underlying;  // set when the domain is the basis set of a matroid
};

// Throws EmptyDomain / DomainNotBinary.
ValuatedMatroidCheck is_valuated_matroid(const DiscreteFunction& mu);

}  // namespace poslab
