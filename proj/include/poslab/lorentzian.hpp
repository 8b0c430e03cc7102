#pragma once

#include "poslab/multipoly.hpp"
#include "poslab/verdict.hpp"

namespace poslab {

// Exact Lorentzian test: nonnegative coefficients, homogeneity, M-convex support,
// and at most one positive eigenvalue for the Hessian of every derivative of
// order d - 2. Clauses on failure: negative-coefficient, not-homogeneous,
// support-not-mconvex, hessian-signature. Throws ZeroPolynomial.
Verdict is_lorentzian(const MultiPoly& f);

}  // namespace poslab
