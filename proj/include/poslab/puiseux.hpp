#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "poslab/matrix.hpp"
#include "poslab/multipoly.hpp"
#include "poslab/rational.hpp"
#include "poslab/subset.hpp"

namespace poslab {

// Finite sum of c t^e with rational exponents: an element of the Puiseux field
// that stays closed under ring operations.
class PuiseuxPoly {
 public:
  using Term = std::pair<Rational, Rational>;  // (exponent, coefficient)

  PuiseuxPoly() = default;
  // Merges equal exponents and drops zero coefficients.
  explicit PuiseuxPoly(std::vector<Term> terms);
  static PuiseuxPoly constant(const Rational& c);
  static PuiseuxPoly monomial(const Rational& coeff, const Rational& exponent);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  // Least exponent and its coefficient. Throw ZeroPolynomial on zero.
  const Rational& ord() const;
  const Rational& leading_coefficient() const;

  // Exact value at t = t0 > 0. Throws BadParams for t0 <= 0 and
  // NonRationalEvaluation when some t0^e is irrational.
  Rational evaluate(const Rational& t0) const;

  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;  // exponents strictly increasing
};

std::string to_string(const PuiseuxPoly& p);

class PuiseuxMatrix {
 public:
  PuiseuxMatrix(int rows, int cols);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  PuiseuxPoly& operator()(int r, int c) { return data_[index(r, c)]; }
  const PuiseuxPoly& operator()(int r, int c) const { return data_[index(r, c)]; }
  RationalMatrix evaluate(const Rational& t0) const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_, cols_;
  std::vector<PuiseuxPoly> data_;
};

// Entry (r, c) = t^(r * exponents[c]). Throws BadParams unless 1 <= k <= n.
PuiseuxMatrix puiseux_vandermonde(int k, std::span<const Rational> exponents);

// Laplace expansion of the square submatrix on `columns`.
PuiseuxPoly determinant(const PuiseuxMatrix& a, Mask columns);

// All maximal minors of a k x n matrix, lexicographic in the column subset,
// including zero minors.
std::vector<std::pair<Mask, PuiseuxPoly>> puiseux_maximal_minors(const PuiseuxMatrix& a);

// Polynomial in x with Puiseux coefficients. Coefficients are stored verbatim;
// tropicalization rejects stored zeros.
struct PuiseuxMultiPoly {
  int nvars = 0;
  std::map<Exponent, PuiseuxPoly> terms;

  // Coefficientwise evaluation at t = t0.
  MultiPoly evaluate(const Rational& t0) const;
};

std::string to_string(const PuiseuxMultiPoly& f);

// sum over nonzero minors p_I x^I.
PuiseuxMultiPoly representing_polynomial(const PuiseuxMatrix& a);

}  // namespace poslab
