#pragma once

#include <span>
#include <utility>
#include <vector>

#include "poslab/rational.hpp"
#include "poslab/subset.hpp"
#include "poslab/unipoly.hpp"
#include "poslab/verdict.hpp"

namespace poslab {

class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  // Row-major initializer; all rows must have equal length.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  // Square submatrix on the given columns, in increasing column order.
  RationalMatrix columns(Mask cols) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_, cols_;
  std::vector<Rational> data_;
};

// Bareiss fraction-free elimination.
Rational determinant(const RationalMatrix& a);
int rank(const RationalMatrix& a);

// Maximal minors of a k x n matrix, indexed by k-subsets in lexicographic order.
class PlueckerVector {
 public:
  PlueckerVector(int k, int n, std::vector<std::pair<Mask, Rational>> values);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<std::pair<Mask, Rational>>& values() const { return values_; }
  const Rational& at(Mask subset) const;
  // Subsets with a nonzero coordinate, lexicographic.
  std::vector<Mask> support() const;

 private:
  int k_, n_;
  std::vector<std::pair<Mask, Rational>> values_;
};

// Throws RankDeficient unless rank(a) == rows(a) <= cols(a).
PlueckerVector maximal_minors(const RationalMatrix& a);

// PASS_CERTIFIED iff every maximal minor is >= 0; FAIL names the lex-first negative one.
Verdict is_totally_nonnegative(const RationalMatrix& a);

// det(lambda I - s) via Faddeev-LeVerrier. Throws NotSymmetric.
UniPoly char_poly(const RationalMatrix& s);

struct EigenCount {
  int positive = 0;
  int zero = 0;
  int negative = 0;
};

// Exact signature of a symmetric matrix by Descartes' rule on its characteristic
// polynomial, which is real-rooted. Throws NotSymmetric.
EigenCount count_positive_eigenvalues(const RationalMatrix& s);

// Entry (r, c) = params[c]^r. Throws BadParams unless params are positive and
// strictly increasing with at least k of them.
RationalMatrix vandermonde_matrix(int k, std::span<const Rational> params);

}  // namespace poslab
