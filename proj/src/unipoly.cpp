#include "poslab/unipoly.hpp"

#include <sstream>

#include "poslab/error.hpp"

namespace poslab {

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
  UniPoly p = constant(1);
  for (const Rational& r : roots) p = p * UniPoly({Rational(-r), Rational(1)});
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + Rational(-1) * b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  std::vector<Rational> out = a.coeffs_;
  for (Rational& c : out) c *= s;
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational& lead = b.leading();
  for (int d = a.degree(); d >= db; --d) {
    const Rational factor = rem[static_cast<std::size_t>(d)] / lead;
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(d - db)] = factor;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(d - db + i)] -= factor * b.coefficients()[static_cast<std::size_t>(i)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = primitive_part(r);
  }
  if (x.is_zero()) return x;
  return Rational(1) / x.leading() * x;
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const Rational& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const Rational& c : p.coefficients()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  return factor * p;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of the zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(1);
  const UniPoly g = gcd(p, p.derivative());
  return primitive_part(divmod(p, g).first);
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Rational mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (d == 0 || mag != 1) out << to_string(mag);
    if (d > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (d > 1) out << "^" << d;
    }
    first = false;
  }
  return out.str();
}

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of the zero polynomial");
  chain_.push_back(squarefree_part(p));
  if (chain_.back().degree() == 0) return;
  chain_.push_back(primitive_part(chain_.back().derivative()));
  while (chain_.back().degree() > 0) {
    const UniPoly& a = chain_[chain_.size() - 2];
    const UniPoly& b = chain_.back();
    UniPoly r = divmod(a, b).second;
    if (r.is_zero()) break;
    chain_.push_back(Rational(-1) * primitive_part(r));
  }
}

int SturmSequence::sign_changes_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const UniPoly& q : chain_) signs.push_back(sign(q(x)));
  return sign_changes(signs);
}

int SturmSequence::sign_changes_at_pos_infinity() const {
  std::vector<int> signs;
  for (const UniPoly& q : chain_) signs.push_back(sign(q.leading()));
  return sign_changes(signs);
}

int SturmSequence::sign_changes_at_neg_infinity() const {
  std::vector<int> signs;
  for (const UniPoly& q : chain_) signs.push_back(q.degree() % 2 == 0 ? sign(q.leading()) : -sign(q.leading()));
  return sign_changes(signs);
}

int SturmSequence::count_roots(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
  const int v_lo = lo ? sign_changes_at(*lo) : sign_changes_at_neg_infinity();
  const int v_hi = hi ? sign_changes_at(*hi) : sign_changes_at_pos_infinity();
  return v_lo - v_hi;
}

RealRootCount sturm_real_root_count(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "real root count of the zero polynomial");
  const SturmSequence seq(p);
  RealRootCount out;
  out.distinct = seq.count_roots(std::nullopt, std::nullopt);
  out.all_real = out.distinct == seq.squarefree_degree();
  return out;
}

int count_roots_below(const UniPoly& p, const Rational& bound) {
  const SturmSequence seq(p);
  int n = seq.count_roots(std::nullopt, bound);
  if (seq.chain().front()(bound) == 0) --n;
  return n;
}

}  // namespace poslab
