#include "poslab/puiseux.hpp"

#include <sstream>

#include "poslab/error.hpp"
#include "poslab/matroid.hpp"

namespace poslab {

PuiseuxPoly::PuiseuxPoly(std::vector<Term> terms) {
  std::map<Rational, Rational> merged;
  for (auto& [e, c] : terms) merged[e] += c;
  for (auto& [e, c] : merged)
    if (c != 0) terms_.emplace_back(e, c);
}

PuiseuxPoly PuiseuxPoly::constant(const Rational& c) { return PuiseuxPoly({{Rational(0), c}}); }

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coeff, const Rational& exponent) {
  return PuiseuxPoly({{exponent, coeff}});
}

const Rational& PuiseuxPoly::ord() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "ord of zero");
  return terms_.front().first;
}

const Rational& PuiseuxPoly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return terms_.front().second;
}

Rational PuiseuxPoly::evaluate(const Rational& t0) const {
  if (t0 <= 0) throw Error(ErrorCode::BadParams, "Puiseux evaluation needs t0 > 0");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational power;
    if (!rational_power(t0, e, power))
      throw Error(ErrorCode::NonRationalEvaluation, to_string(t0) + "^" + to_string(e) + " is not rational");
    sum += c * power;
  }
  return sum;
}

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  std::vector<PuiseuxPoly::Term> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return PuiseuxPoly(std::move(all));
}

PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  std::vector<PuiseuxPoly::Term> all = a.terms_;
  for (const auto& [e, c] : b.terms_) all.emplace_back(e, -c);
  return PuiseuxPoly(std::move(all));
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  std::vector<PuiseuxPoly::Term> all;
  all.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) all.emplace_back(ea + eb, ca * cb);
  return PuiseuxPoly(std::move(all));
}

std::string to_string(const PuiseuxPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (e == 0) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << "*";
    out << "t";
    if (e != 1) out << "^" << (e.get_den() == 1 ? to_string(e) : "(" + to_string(e) + ")");
  }
  return out.str();
}

PuiseuxMatrix::PuiseuxMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::DimensionMismatch, "negative matrix dimension");
}

RationalMatrix PuiseuxMatrix::evaluate(const Rational& t0) const {
  RationalMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).evaluate(t0);
  return out;
}

PuiseuxMatrix puiseux_vandermonde(int k, std::span<const Rational> exponents) {
  const int n = static_cast<int>(exponents.size());
  if (k < 1 || k > n || n > kMaxGround) throw Error(ErrorCode::BadParams, "Puiseux Vandermonde needs 1 <= k <= n");
  PuiseuxMatrix out(k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = PuiseuxPoly::monomial(1, r * exponents[static_cast<std::size_t>(c)]);
  return out;
}

namespace {

PuiseuxPoly laplace(const PuiseuxMatrix& a, int row, Mask columns, std::map<Mask, PuiseuxPoly>& memo) {
  if (columns == 0) return PuiseuxPoly::constant(1);
  if (auto it = memo.find(columns); it != memo.end()) return it->second;
  PuiseuxPoly sum;
  int position = 0;
  for (int c : elements(columns)) {
    const PuiseuxPoly& entry = a(row, c);
    if (!entry.is_zero()) {
      PuiseuxPoly term = entry * laplace(a, row + 1, columns & ~bit(c), memo);
      sum = position % 2 == 0 ? sum + term : sum - term;
    }
    ++position;
  }
  memo.emplace(columns, sum);
  return sum;
}

}  // namespace

PuiseuxPoly determinant(const PuiseuxMatrix& a, Mask columns) {
  if (cardinality(columns) != a.rows())
    throw Error(ErrorCode::DimensionMismatch, "determinant needs as many columns as rows");
  std::map<Mask, PuiseuxPoly> memo;
  return laplace(a, 0, columns, memo);
}

std::vector<std::pair<Mask, PuiseuxPoly>> puiseux_maximal_minors(const PuiseuxMatrix& a) {
  if (a.rows() > a.cols() || a.cols() > kMaxGround)
    throw Error(ErrorCode::DimensionMismatch, "maximal minors need rows <= cols <= 64");
  std::vector<std::pair<Mask, PuiseuxPoly>> out;
  std::map<Mask, PuiseuxPoly> memo;  // keyed by remaining columns, shared across subsets
  for (Mask s : k_subsets(a.cols(), a.rows())) out.emplace_back(s, laplace(a, 0, s, memo));
  return out;
}

MultiPoly PuiseuxMultiPoly::evaluate(const Rational& t0) const {
  MultiPoly out(nvars);
  for (const auto& [alpha, c] : terms) out.add_term(alpha, c.evaluate(t0));
  return out;
}

std::string to_string(const PuiseuxMultiPoly& f) {
  if (f.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [alpha, c] : f.terms) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(c) << ")";
    for (std::size_t v = 0; v < alpha.size(); ++v) {
      if (alpha[v] == 0) continue;
      out << "*x" << v + 1;
      if (alpha[v] > 1) out << "^" << alpha[v];
    }
  }
  return out.str();
}

PuiseuxMultiPoly representing_polynomial(const PuiseuxMatrix& a) {
  PuiseuxMultiPoly f{a.cols(), {}};
  for (auto& [s, minor] : puiseux_maximal_minors(a))
    if (!minor.is_zero()) f.terms.emplace(indicator(s, a.cols()), std::move(minor));
  return f;
}

}  // namespace poslab
