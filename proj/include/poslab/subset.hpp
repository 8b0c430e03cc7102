#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace poslab {

// Subsets of a ground set with at most 64 elements, element e <-> bit e.
using Mask = std::uint64_t;

constexpr int kMaxGround = 64;

inline constexpr Mask bit(int e) { return Mask{1} << e; }
inline constexpr bool contains(Mask s, int e) { return (s >> e) & 1U; }
inline constexpr int cardinality(Mask s) { return std::popcount(s); }
inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

std::vector<int> elements(Mask s);
Mask mask_of(const std::vector<int>& elems);

// Lexicographic order of the sorted element lists ({0,1} < {0,2} < {1,2}).
inline bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

struct LexLess {
  bool operator()(Mask a, Mask b) const { return lex_less(a, b); }
};

// All k-subsets of {0..n-1} inside `within`, in lexicographic order.
std::vector<Mask> k_subsets(int n, int k, Mask within = ~Mask{0});

// Zero-based element list rendered 1-based, e.g. "{1,3}".
std::string format_set(Mask s);

}  // namespace poslab
