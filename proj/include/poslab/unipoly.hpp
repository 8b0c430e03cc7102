#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poslab/rational.hpp"

namespace poslab {

// Dense univariate polynomial over Q, coefficients in ascending degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  // Product of (t - r) over the given roots.
  static UniPoly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  UniPoly derivative() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division; throws ZeroPolynomial for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Positive rational multiple with coprime integer coefficients.
UniPoly primitive_part(const UniPoly& p);

// p / gcd(p, p'), made primitive.
UniPoly squarefree_part(const UniPoly& p);

std::string to_string(const UniPoly& p, const std::string& var = "t");

class SturmSequence {
 public:
  // Built from the squarefree part of p; throws ZeroPolynomial on p == 0.
  explicit SturmSequence(const UniPoly& p);

  int sign_changes_at(const Rational& x) const;
  int sign_changes_at_pos_infinity() const;
  int sign_changes_at_neg_infinity() const;

  // Distinct real roots in (lo, hi]; an empty bound means infinity.
  int count_roots(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

  int squarefree_degree() const { return chain_.front().degree(); }
  const std::vector<UniPoly>& chain() const { return chain_; }

 private:
  std::vector<UniPoly> chain_;
};

struct RealRootCount {
  int distinct = 0;       // distinct real roots
  bool all_real = false;  // every complex root (with multiplicity) is real
};

RealRootCount sturm_real_root_count(const UniPoly& p);

// Distinct real roots strictly below `bound`.
int count_roots_below(const UniPoly& p, const Rational& bound);

}  // namespace poslab
