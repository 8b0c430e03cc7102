#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "poslab/matrix.hpp"
#include "poslab/rational.hpp"
#include "poslab/unipoly.hpp"
#include "poslab/verdict.hpp"

namespace poslab {

using Support = std::set<Exponent>;

// Sparse polynomial over Q in a fixed number of variables. Zero coefficients
// are never stored; terms are keyed by exponent vector in lexicographic order.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit MultiPoly(int nvars = 0);

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(const Exponent& alpha, const Rational& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponent& alpha) const;
  void add_term(const Exponent& alpha, const Rational& c);

  // Largest total degree over all terms; -1 for the zero polynomial.
  int total_degree() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_;
  TermMap terms_;
};

int degree_of(const Exponent& alpha);

// Exponents of total degree `degree` lying componentwise below some element of `support`.
std::set<Exponent> dominated_exponents(const Support& support, int degree);

// Zero-based variable index i. Throws BadIndex.
MultiPoly partial_derivative(const MultiPoly& f, int i);
// Mixed derivative d^alpha f.
MultiPoly derivative(const MultiPoly& f, const Exponent& alpha);

Rational evaluate(const MultiPoly& f, std::span<const Rational> x);

RationalMatrix hessian_at(const MultiPoly& f, std::span<const Rational> x);

struct PolyFacts {
  bool is_homogeneous = false;
  std::optional<int> degree;  // common degree when homogeneous
  bool is_multiaffine = false;
  bool has_nonnegative_coeffs = false;
  Support support;
};

PolyFacts predicates(const MultiPoly& f);

// sum over alpha in J of x^alpha / alpha!. Throws EmptyJ / DimensionMismatch.
MultiPoly generating_function_fJ(const std::vector<Exponent>& J);

// c * d^(alpha+e_i) f * d^(alpha+e_j) f - d^alpha f * d^(alpha+e_i+e_j) f.
// Throws SameVariable when i == j and NonpositiveC when c <= 0.
MultiPoly rayleigh_difference(const MultiPoly& f, int i, int j, const Rational& c, const Exponent& alpha);

// Same quantity without the i != j restriction (used for non-multiaffine f).
MultiPoly rayleigh_difference_any(const MultiPoly& f, int i, int j, const Rational& c, const Exponent& alpha);

// t -> f(a + t b).
UniPoly restrict_to_line(const MultiPoly& f, std::span<const Rational> a, std::span<const Rational> b);

std::string to_string(const MultiPoly& f);

// Precompiled form for repeated exact evaluation at many points.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& f);

  int nvars() const { return nvars_; }
  int max_power() const { return max_power_; }
  bool is_zero() const { return coeffs_.empty(); }

  // powers[v][p] must hold x_v^p for p <= max_power().
  Rational evaluate(const std::vector<std::vector<Rational>>& powers) const;

 private:
  struct Factor {
    int var;
    int power;
  };
  int nvars_ = 0;
  int max_power_ = 0;
  std::vector<Rational> coeffs_;
  std::vector<std::size_t> offsets_;  // factors_[offsets_[t] .. offsets_[t+1])
  std::vector<Factor> factors_;
};

// powers[v][p] = x_v^p for p in 0..max_power.
std::vector<std::vector<Rational>> power_table(std::span<const Rational> x, int max_power);

}  // namespace poslab
