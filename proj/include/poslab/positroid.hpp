#pragma once

#include <vector>

#include "poslab/matrix.hpp"
#include "poslab/matroid.hpp"
#include "poslab/multipoly.hpp"
#include "poslab/verdict.hpp"

namespace poslab {

// entries[i] is the Gale-minimal basis for the cyclic order i < i+1 < ... < i-1.
struct Necklace {
  int k = 0;
  int n = 0;
  std::vector<Mask> entries;
  friend bool operator==(const Necklace&, const Necklace&) = default;
};

Necklace grassmann_necklace(const Matroid& m);

// Gale comparison of two k-subsets in the cyclic order starting at `start`.
bool gale_geq(Mask b, Mask i, int start, int n);

// k-subsets that Gale-dominate every necklace entry in its own shifted order.
// Throws InvalidNecklace unless entries are k-subsets with I_{i+1} ⊇ I_i \ {i}.
Matroid positroid_from_necklace(const Necklace& necklace, const GroundSet& ground);
Matroid positroid_from_necklace(const Necklace& necklace);

// Round trip through the necklace; FAIL carries the lex-first extra basis.
Verdict is_positroid(const Matroid& m);

// sum over k-subsets I of det(a[I]) x^I. Throws RankDeficient.
MultiPoly representing_polynomial(const RationalMatrix& a);

struct MatrixPositroid {
  Matroid matroid;  // supports of the nonzero maximal minors
  Verdict verdict;  // total nonnegativity of the maximal minors
};

MatrixPositroid positroid_of_matrix(const RationalMatrix& a);

}  // namespace poslab
