#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the Rational type and are deliberately naive.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "poslab/rational.hpp"

namespace oracle {

using poslab::Rational;
using Set = std::vector<int>;  // sorted, 0-based
using Poly = std::vector<Rational>;  // ascending coefficients

inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::vector<Set> combinations(int n, int k) {
  std::vector<Set> out;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Set s;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline Set set_union(Set a, const Set& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline Set set_minus(const Set& a, const Set& b) {
  Set out;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  return out;
}

inline bool has(const Set& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

// Sum over permutations of signed products.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline bool exchange_axiom(const std::vector<Set>& bases) {
  std::set<Set> all(bases.begin(), bases.end());
  for (const Set& i : bases)
    for (const Set& j : bases)
      for (int a : i) {
        bool found = false;
        for (int b : j) {
          if (has(i, b) && b != a) continue;
          Set candidate = set_union(set_minus(i, {a}), {b});
          if (all.count(candidate)) found = true;
        }
        if (!found) return false;
      }
  return true;
}

// Does s admit an injective assignment to distinct sets containing its elements?
inline bool has_sdr(const Set& s, const std::vector<Set>& sets) {
  std::vector<std::size_t> idx(sets.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::function<bool(std::size_t, std::vector<bool>&)> assign = [&](std::size_t pos, std::vector<bool>& used) {
    if (pos == s.size()) return true;
    for (std::size_t k = 0; k < sets.size(); ++k)
      if (!used[k] && has(sets[k], s[pos])) {
        used[k] = true;
        if (assign(pos + 1, used)) return true;
        used[k] = false;
      }
    return false;
  };
  std::vector<bool> used(sets.size(), false);
  return assign(0, used);
}

struct Counts {
  long both = 0, neither = 0, i_only = 0, j_only = 0, total = 0;
};

inline Counts pair_counts(const std::vector<Set>& bases, int i, int j) {
  Counts c;
  for (const Set& b : bases) {
    const bool hi = has(b, i), hj = has(b, j);
    ++c.total;
    if (hi && hj) ++c.both;
    else if (hi) ++c.i_only;
    else if (hj) ++c.j_only;
    else ++c.neither;
  }
  return c;
}

// ---- univariate polynomials ----

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Rational eval(const Poly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

inline Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    trim(a);
  }
  return a;
}

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * p[k]);
  trim(d);
  return d;
}

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = b;
    b = r;
  }
  return a;
}

inline int sign_at_pos_inf(const Poly& p) { return sgn(p.back()); }
inline int sign_at_neg_inf(const Poly& p) { return ((p.size() - 1) % 2 ? -1 : 1) * sgn(p.back()); }

// Plain Sturm chain p, p', -rem(...), no normalization.
inline int distinct_real_roots(Poly p) {
  trim(p);
  std::vector<Poly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    for (Rational& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(r);
  }
  if (chain.back().empty()) chain.pop_back();
  auto changes = [&](auto sign_of) {
    int count = 0, last = 0;
    for (const Poly& q : chain) {
      const int s = sign_of(q);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return changes(sign_at_neg_inf) - changes(sign_at_pos_inf);
}

// Every complex root real: distinct real roots equals the degree of p / gcd(p, p').
inline bool all_roots_real(const Poly& p) {
  Poly q = p;
  trim(q);
  const Poly g = gcd(q, derivative(q));
  const int squarefree_degree = static_cast<int>(q.size()) - static_cast<int>(g.size());
  return distinct_real_roots(q) == squarefree_degree;
}

// Coefficients of the degree <= d polynomial through (x_k, y_k), k = 0..d.
inline Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  Poly out(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    Poly basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t m = 0; m < n; ++m) {
      if (m == k) continue;
      Poly next(basis.size() + 1, Rational(0));
      for (std::size_t c = 0; c < basis.size(); ++c) {
        next[c + 1] += basis[c];
        next[c] -= xs[m] * basis[c];
      }
      basis = next;
      denom *= xs[k] - xs[m];
    }
    for (std::size_t c = 0; c < basis.size(); ++c) out[c] += ys[k] * basis[c] / denom;
  }
  trim(out);
  return out;
}

// ---- M-convexity ----

using Vec = std::vector<int>;

inline Vec move(Vec v, std::size_t minus, std::size_t plus) {
  --v[minus];
  ++v[plus];
  return v;
}

inline bool mconvex_set(const std::set<Vec>& j) {
  for (const Vec& a : j)
    for (const Vec& b : j)
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= b[i]) continue;
        bool ok = false;
        for (std::size_t k = 0; k < a.size(); ++k)
          if (a[k] < b[k] && j.count(move(a, i, k))) ok = true;
        if (!ok) return false;
      }
  return true;
}

// Symmetric exchange for a MinPlus function given on its domain.
inline bool mconvex_function(const std::map<Vec, Rational>& g) {
  for (const auto& [a, va] : g)
    for (const auto& [b, vb] : g)
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= b[i]) continue;
        bool ok = false;
        for (std::size_t k = 0; k < a.size(); ++k) {
          if (a[k] >= b[k]) continue;
          auto x = g.find(move(a, i, k));
          auto y = g.find(move(b, k, i));
          if (x != g.end() && y != g.end() && va + vb >= x->second + y->second) ok = true;
        }
        if (!ok) return false;
      }
  return true;
}

// ---- tropical three-term relations (MinPlus) ----

inline bool three_term_relations(int n, int k, const std::map<Set, Rational>& mu) {
  if (k < 2) return true;
  auto w = [&](const Set& s) -> std::optional<Rational> {
    auto it = mu.find(s);
    if (it == mu.end()) return std::nullopt;
    return it->second;
  };
  for (const Set& s : combinations(n, k - 2))
    for (const Set& q : combinations(n, 4)) {
      bool disjoint = true;
      for (int x : q) disjoint = disjoint && !has(s, x);
      if (!disjoint) continue;
      const int a = q[0], b = q[1], c = q[2], d = q[3];
      std::vector<Rational> finite;
      auto add = [&](const Set& x, const Set& y) {
        auto wx = w(set_union(s, x));
        auto wy = w(set_union(s, y));
        if (wx && wy) finite.push_back(*wx + *wy);
      };
      add({a, b}, {c, d});
      add({a, c}, {b, d});
      add({a, d}, {b, c});
      if (finite.empty()) continue;
      const Rational best = *std::min_element(finite.begin(), finite.end());
      if (std::count(finite.begin(), finite.end(), best) < 2) return false;
    }
  return true;
}

}  // namespace oracle
