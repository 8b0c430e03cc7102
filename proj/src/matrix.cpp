#include "poslab/matrix.hpp"

#include <algorithm>

#include "poslab/error.hpp"

namespace poslab {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::DimensionMismatch, "negative matrix dimension");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::columns(Mask cols) const {
  const std::vector<int> picked = elements(cols);
  RationalMatrix out(rows_, static_cast<int>(picked.size()));
  for (int r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < picked.size(); ++c) out(r, static_cast<int>(c)) = (*this)(r, picked[c]);
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Rational determinant(const RationalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  RationalMatrix m = a;
  Rational prev_pivot = 1;
  int swaps = 0;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      ++swaps;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev_pivot;
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  Rational det = m(n - 1, n - 1);
  return swaps % 2 == 0 ? det : Rational(-det);
}

int rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational factor = m(i, c) / m(r, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

PlueckerVector::PlueckerVector(int k, int n, std::vector<std::pair<Mask, Rational>> values)
    : k_(k), n_(n), values_(std::move(values)) {}

const Rational& PlueckerVector::at(Mask subset) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), subset,
                             [](const auto& entry, Mask key) { return lex_less(entry.first, key); });
  if (it == values_.end() || it->first != subset)
    throw Error(ErrorCode::BadIndex, "not a " + std::to_string(k_) + "-subset: " + format_set(subset));
  return it->second;
}

std::vector<Mask> PlueckerVector::support() const {
  std::vector<Mask> out;
  for (const auto& [s, v] : values_)
    if (v != 0) out.push_back(s);
  return out;
}

PlueckerVector maximal_minors(const RationalMatrix& a) {
  const int k = a.rows(), n = a.cols();
  if (k > n || rank(a) != k)
    throw Error(ErrorCode::RankDeficient, "maximal minors need a full-row-rank k x n matrix with k <= n");
  std::vector<std::pair<Mask, Rational>> values;
  for (Mask s : k_subsets(n, k)) values.emplace_back(s, determinant(a.columns(s)));
  return PlueckerVector(k, n, std::move(values));
}

Verdict is_totally_nonnegative(const RationalMatrix& a) {
  const int k = a.rows(), n = a.cols();
  if (k > n) throw Error(ErrorCode::DimensionMismatch, "total nonnegativity needs k <= n");
  std::uint64_t examined = 0;
  for (Mask s : k_subsets(n, k)) {
    ++examined;
    Rational minor = determinant(a.columns(s));
    if (minor < 0) return Verdict::fail("totally-nonnegative", "negative-minor", NegativeMinor{s, minor}, examined);
  }
  return Verdict::certified("totally-nonnegative", "all-minors-nonnegative", examined);
}

UniPoly char_poly(const RationalMatrix& s) {
  if (!s.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "characteristic polynomial needs a symmetric matrix");
  const int n = s.rows();
  // coeffs[n - k] is the coefficient of lambda^(n - k)
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[static_cast<std::size_t>(n)] = 1;
  RationalMatrix m(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    RationalMatrix next = s * m;
    for (int i = 0; i < n; ++i) next(i, i) += coeffs[static_cast<std::size_t>(n - k + 1)];
    m = std::move(next);
    RationalMatrix am = s * m;
    Rational trace = 0;
    for (int i = 0; i < n; ++i) trace += am(i, i);
    coeffs[static_cast<std::size_t>(n - k)] = -trace / k;
  }
  return UniPoly(std::move(coeffs));
}

EigenCount count_positive_eigenvalues(const RationalMatrix& s) {
  const UniPoly p = char_poly(s);
  const auto& c = p.coefficients();
  EigenCount out;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  out.zero = static_cast<int>(low);

  int last = 0;
  int changes_pos = 0, changes_neg = 0, last_neg = 0;
  for (std::size_t i = low; i < c.size(); ++i) {
    const int sg = sign(c[i]);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes_pos;
    last = sg;
    const int sn = (i % 2 == 0) ? sg : -sg;  // coefficients of p(-lambda)
    if (last_neg != 0 && sn != last_neg) ++changes_neg;
    last_neg = sn;
  }
  out.positive = changes_pos;
  out.negative = changes_neg;
  return out;
}

RationalMatrix vandermonde_matrix(int k, std::span<const Rational> params) {
  const int n = static_cast<int>(params.size());
  if (k < 1 || n < k) throw Error(ErrorCode::BadParams, "Vandermonde needs at least k >= 1 parameters");
  for (int c = 0; c < n; ++c) {
    if (params[static_cast<std::size_t>(c)] <= 0)
      throw Error(ErrorCode::BadParams, "Vandermonde parameters must be positive");
    if (c > 0 && params[static_cast<std::size_t>(c)] <= params[static_cast<std::size_t>(c - 1)])
      throw Error(ErrorCode::BadParams, "Vandermonde parameters must be strictly increasing");
  }
  RationalMatrix m(k, n);
  for (int c = 0; c < n; ++c) {
    Rational power = 1;
    for (int r = 0; r < k; ++r) {
      m(r, c) = power;
      power *= params[static_cast<std::size_t>(c)];
    }
  }
  return m;
}

}  // namespace poslab
