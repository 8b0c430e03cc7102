#include "poslab/positroid.hpp"

#include <algorithm>

#include "poslab/error.hpp"

namespace poslab {

namespace {

// Positions of the elements of s in the order start, start+1, ..., start-1.
std::vector<int> shifted_positions(Mask s, int start, int n) {
  std::vector<int> pos;
  for (int e : elements(s)) pos.push_back((e - start + n) % n);
  std::sort(pos.begin(), pos.end());
  return pos;
}

void validate(const Necklace& nk) {
  if (nk.n < 1 || nk.n > kMaxGround || nk.k < 0 || nk.k > nk.n ||
      static_cast<int>(nk.entries.size()) != nk.n)
    throw Error(ErrorCode::InvalidNecklace, "necklace needs n entries on a ground set of size n");
  for (int i = 0; i < nk.n; ++i) {
    const Mask cur = nk.entries[static_cast<std::size_t>(i)];
    if (cardinality(cur) != nk.k || (cur & ~full_mask(nk.n)) != 0)
      throw Error(ErrorCode::InvalidNecklace, "necklace entry " + std::to_string(i + 1) + " is not a k-subset");
    const Mask next = nk.entries[static_cast<std::size_t>((i + 1) % nk.n)];
    if (((cur & ~bit(i)) & ~next) != 0)
      throw Error(ErrorCode::InvalidNecklace,
                  "entry " + std::to_string((i + 1) % nk.n + 1) + " does not contain entry " + std::to_string(i + 1) +
                      " minus " + std::to_string(i + 1));
  }
}

}  // namespace

Necklace grassmann_necklace(const Matroid& m) {
  Necklace out{m.rank(), m.size(), {}};
  for (int start = 0; start < m.size(); ++start) {
    Mask basis = 0;
    for (int step = 0; step < m.size() && cardinality(basis) < m.rank(); ++step) {
      const int e = (start + step) % m.size();
      if (m.is_independent(basis | bit(e))) basis |= bit(e);
    }
    out.entries.push_back(basis);
  }
  return out;
}

bool gale_geq(Mask b, Mask i, int start, int n) {
  const std::vector<int> pb = shifted_positions(b, start, n);
  const std::vector<int> pi = shifted_positions(i, start, n);
  if (pb.size() != pi.size()) return false;
  for (std::size_t r = 0; r < pb.size(); ++r)
    if (pb[r] < pi[r]) return false;
  return true;
}

Matroid positroid_from_necklace(const Necklace& necklace, const GroundSet& ground) {
  validate(necklace);
  std::vector<Mask> bases;
  for (Mask b : k_subsets(necklace.n, necklace.k)) {
    bool ok = true;
    for (int i = 0; i < necklace.n && ok; ++i) ok = gale_geq(b, necklace.entries[static_cast<std::size_t>(i)], i, necklace.n);
    if (ok) bases.push_back(b);
  }
  if (bases.empty()) throw Error(ErrorCode::InvalidNecklace, "necklace dominates no k-subset");
  return Matroid(ground, necklace.k, std::move(bases), Validation::Trusted);
}

Matroid positroid_from_necklace(const Necklace& necklace) {
  return positroid_from_necklace(necklace, GroundSet(necklace.n));
}

Verdict is_positroid(const Matroid& m) {
  if (m.size() == 0) return Verdict::certified("positroid", "necklace-round-trip", 0);
  const Matroid envelope = positroid_from_necklace(grassmann_necklace(m), m.ground());
  std::uint64_t effort = 0;
  for (Mask b : envelope.bases()) {
    ++effort;
    if (!m.is_basis(b)) return Verdict::fail("positroid", "necklace-round-trip", EnvelopeViolation{b}, effort);
  }
  return Verdict::certified("positroid", "necklace-round-trip", effort);
}

MultiPoly representing_polynomial(const RationalMatrix& a) {
  const PlueckerVector p = maximal_minors(a);
  MultiPoly f(p.n());
  for (const auto& [subset, minor] : p.values()) f.add_term(indicator(subset, p.n()), minor);
  return f;
}

MatrixPositroid positroid_of_matrix(const RationalMatrix& a) {
  const PlueckerVector p = maximal_minors(a);
  return {Matroid(GroundSet(p.n()), p.k(), p.support(), Validation::Trusted), is_totally_nonnegative(a)};
}

}  // namespace poslab
