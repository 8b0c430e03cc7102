#pragma once

#include <map>
#include <optional>
#include <vector>

#include "poslab/matroid.hpp"
#include "poslab/mconvex.hpp"
#include "poslab/puiseux.hpp"
#include "poslab/verdict.hpp"

namespace poslab {

// Weights on k-subsets of [n]; subsets without an entry are infinite
// (+inf under MinPlus, -inf under MaxPlus).
struct WeightVector {
  int n = 0;
  Convention convention = Convention::MinPlus;
  std::map<Mask, Rational, LexLess> values;

  std::optional<Rational> at(Mask s) const;
  // MinPlus orientation (values negated when MaxPlus).
  WeightVector as_min_plus() const;
  // Same weights read in the other convention with negated values.
  WeightVector dual_view() const;
  DiscreteFunction as_function() const;
  // Matroid whose bases are the finite entries (validated).
  Matroid support_matroid(const GroundSet& ground) const;
  Matroid support_matroid() const { return support_matroid(GroundSet(n)); }
};

WeightVector zero_weights(const Matroid& m, Convention convention = Convention::MinPlus);

struct Tropicalization {
  DiscreteFunction min_plus;               // alpha -> ord(c_alpha)
  DiscreteFunction max_plus;               // alpha -> -ord(c_alpha)
  std::map<Exponent, int> leading_sign;    // sign of the leading coefficient
};

// Throws ZeroCoefficientStored when some stored coefficient is zero.
Tropicalization tropicalize(const PuiseuxMultiPoly& f);

// Throws SupportMismatch unless the finite entries of mu are exactly the bases of m.
void require_support(const Matroid& m, const WeightVector& mu);

// Tropical three-term Plücker relations over every (S, a<b<c<d); the first
// violation in lexicographic (S, quad) order is the witness.
Verdict is_in_dressian(const Matroid& m, const WeightVector& mu);

// Middle product S+ac + S+bd must equal the optimum of the other two.
// Throws NotAPositroid, SupportMismatch.
Verdict is_in_positive_dressian(const Matroid& m, const WeightVector& mu);

// f = sum over bases of t^(mu(B)) x^B in MinPlus orientation. Throws NotValuated.
PuiseuxMultiPoly lift_to_lorentzian(const Matroid& m, const WeightVector& mu);

struct ScheduleEntry {
  Rational t0;
  Verdict verdict;
};

struct LorentzianSchedule {
  std::vector<ScheduleEntry> entries;
  bool stable = false;  // the last three verdicts agree
};

// is_lorentzian of f(t0) at t0 = 2^-m, m = 1..steps.
LorentzianSchedule lorentzian_schedule(const PuiseuxMultiPoly& f, int steps = 10);

struct FlagConstituent {
  Matroid matroid;
  WeightVector weights;
};

struct FlagChain {
  std::vector<FlagConstituent> constituents;
};

// Tropical incidence relations between consecutive constituents (ranks r < s):
// for |S| = r - 1, |T| = s + 1 the optimum of mu_r(S+j) + mu_s(T-j), j in T \ S,
// is vacuous or attained twice. Values are compared in MinPlus orientation.
// Throws ChainTooShort, InvalidChain, SupportMismatch, ConstituentNotValuated.
Verdict is_valuated_flag(const FlagChain& chain);

// Constituentwise lift. Throws NotValuatedFlag when is_valuated_flag fails.
std::vector<PuiseuxMultiPoly> flag_lorentzian_lift(const FlagChain& chain);

}  // namespace poslab
