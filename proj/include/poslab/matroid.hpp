#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poslab/error.hpp"
#include "poslab/multipoly.hpp"
#include "poslab/subset.hpp"
#include "poslab/verdict.hpp"

namespace poslab {

struct GroundSet {
  int n = 0;
  std::vector<std::string> labels;  // empty, or n distinct display names

  GroundSet() = default;
  explicit GroundSet(int size, std::vector<std::string> names = {});

  // Display name of element e (1-based number when unlabeled).
  std::string label(int e) const;
  std::string format(Mask s) const;
  // Element index for a display name or 1-based number; throws BadElement.
  int index_of(std::string_view name) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;
};

struct SetSystem {
  GroundSet ground;
  std::vector<Mask> sets;
};

class ExchangeFailureError : public Error {
 public:
  ExchangeFailureError(Mask first, Mask second, int removed, const std::string& message)
      : Error(ErrorCode::ExchangeFailure, message), first_(first), second_(second), removed_(removed) {}
  Mask first() const { return first_; }
  Mask second() const { return second_; }
  int removed() const { return removed_; }

 private:
  Mask first_, second_;
  int removed_;
};

class MixedCardinalityError : public Error {
 public:
  MixedCardinalityError(Mask witness, const std::string& message)
      : Error(ErrorCode::MixedCardinality, message), witness_(witness) {}
  Mask witness() const { return witness_; }

 private:
  Mask witness_;
};

enum class Validation { Full, Trusted };

// Immutable matroid given by its bases (lexicographically sorted, unique).
class Matroid {
 public:
  Matroid(GroundSet ground, int rank, std::vector<Mask> bases, Validation validation = Validation::Full);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.n; }
  int rank() const { return rank_; }
  const std::vector<Mask>& bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }

  bool is_basis(Mask s) const;
  bool is_independent(Mask s) const;
  bool is_loop(int e) const;
  bool is_coloop(int e) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_.n == b.ground_.n && a.rank_ == b.rank_ && a.bases_ == b.bases_;
  }

 private:
  GroundSet ground_;
  int rank_;
  std::vector<Mask> bases_;
  Mask union_ = 0;
  Mask intersection_ = 0;
};

// Lex-first (I, J, a) violating basis exchange, if any.
std::optional<BasisExchangeViolation> find_exchange_violation(std::span<const Mask> bases);

Matroid matroid_from_bases(const GroundSet& ground, int rank, std::vector<Mask> bases,
                           Validation validation = Validation::Full);
Matroid uniform(int k, int n);
Matroid transversal_matroid(const SetSystem& system, std::optional<int> rank_hint = std::nullopt);

struct Minor {
  Matroid matroid;
  std::vector<int> original;  // minor element -> element of the parent ground set
};

// m \ deleted / contracted. `contracted` must be independent.
Minor minor(const Matroid& m, Mask deleted, Mask contracted);
Matroid dual(const Matroid& m);

// fano, vamos, choe-wagner-L, uniform-K-N
Matroid named(std::string_view name);
std::vector<std::string> named_matroids();

PairStats pair_stats(const Matroid& m, int i, int j);
Verdict is_negatively_correlated(const Matroid& m);
Verdict is_balanced(const Matroid& m);

MultiPoly basis_generating_polynomial(const Matroid& m);
Exponent indicator(Mask s, int n);
Mask mask_of_exponent(const Exponent& alpha);

}  // namespace poslab
