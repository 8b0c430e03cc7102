#include "poslab/subset.hpp"

#include <functional>

namespace poslab {

std::vector<int> elements(Mask s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= bit(e);
  return m;
}

std::vector<Mask> k_subsets(int n, int k, Mask within) {
  std::vector<Mask> out;
  std::vector<int> pool;
  for (int e = 0; e < n; ++e)
    if (contains(within, e)) pool.push_back(e);
  if (k < 0 || k > static_cast<int>(pool.size())) return out;

  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int m = static_cast<int>(pool.size());
  while (true) {
    Mask s = 0;
    for (int i : idx) s |= bit(pool[i]);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::string format_set(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace poslab
