#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "poslab/rational.hpp"
#include "poslab/subset.hpp"
#include "poslab/unipoly.hpp"

namespace poslab {

// Exponent vector of a monomial; fixed length per polynomial.
using Exponent = std::vector<int>;

enum class Status { PassCertified, PassSampled, Fail };

const char* status_name(Status s);
inline bool passed(Status s) { return s != Status::Fail; }

// Uniform-basis probabilities for an element pair.
struct PairStats {
  Rational pr_both, pr_neither, pr_i_only, pr_j_only, pr_i, pr_j;
};

struct BasisExchangeViolation {
  Mask first = 0, second = 0;
  int removed = -1;
};

struct NegativeMinor {
  Mask subset = 0;
  Rational minor;
};

// gap = Pr(ij) - Pr(i)Pr(j) > 0
struct PairViolation {
  int i = -1, j = -1;
  PairStats stats;
  Rational gap;
};

struct CorrelationViolation {
  std::vector<PairViolation> pairs;
};

struct MinorViolation {
  Mask deleted = 0, contracted = 0;
  std::vector<int> original;  // minor element -> ground element
  PairViolation pair;         // indices in the minor's ground set
};

// i == -1 marks the local (distance-4) exchange test.
struct ExchangeViolation {
  Exponent alpha, beta;
  int i = -1;
};

struct DegreeMismatch {
  Exponent alpha, beta;
};

struct CoefficientViolation {
  Exponent alpha;
  Rational coefficient;
};

struct HessianViolation {
  Exponent alpha;
  int positive = 0, zero = 0, negative = 0;
};

struct PointViolation {
  RationalVector point;
  int i = -1, j = -1;
  Exponent alpha;
  Rational value;
};

struct LineViolation {
  RationalVector base, direction;
  UniPoly restriction;
  int distinct_real_roots = 0;
};

// products[0] = S+ab + S+cd, [1] = S+ac + S+bd, [2] = S+ad + S+bc; nullopt is infinite.
struct RelationViolation {
  Mask s = 0;
  std::array<int, 4> quad{};
  std::array<std::optional<Rational>, 3> products;
};

struct IncidenceTerm {
  int j = -1;
  std::optional<Rational> value;
};

struct IncidenceViolation {
  std::size_t level = 0;  // pair (level, level + 1) of the chain
  Mask s = 0, t = 0;
  std::vector<IncidenceTerm> terms;
};

struct EnvelopeViolation {
  Mask basis = 0;
};

using Witness = std::variant<std::monostate, BasisExchangeViolation, NegativeMinor,
                             CorrelationViolation, MinorViolation, ExchangeViolation,
                             DegreeMismatch, CoefficientViolation, HessianViolation,
                             PointViolation, LineViolation, RelationViolation,
                             IncidenceViolation, EnvelopeViolation>;

struct Verdict {
  Status status = Status::PassCertified;
  std::string check;        // which decision procedure produced this
  std::string clause;       // failing clause, when status == Fail
  std::string certificate;  // certification route for passes
  Witness witness;
  std::uint64_t effort = 0;  // samples, relations or exchanges examined

  static Verdict certified(std::string check, std::string certificate, std::uint64_t effort);
  static Verdict sampled(std::string check, std::uint64_t effort);
  static Verdict fail(std::string check, std::string clause, Witness witness, std::uint64_t effort);

  bool ok() const { return passed(status); }
};

}  // namespace poslab
