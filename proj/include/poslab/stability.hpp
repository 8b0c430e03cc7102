#pragma once

#include <optional>

#include "poslab/multipoly.hpp"
#include "poslab/sampler.hpp"
#include "poslab/verdict.hpp"

namespace poslab {

// Samples lines a + t b with a drawn from the sampler's box and b from (0, 2]^n;
// a restriction with a non-real root is a FAIL witness. Lines on which f vanishes
// identically are skipped. Throws ZeroPolynomial.
Verdict stability_falsifier(const MultiPoly& f, const Sampler& sampler);

struct HyperbolicityResult {
  Verdict verdict;
  // Orthant mode only: whether every sampled x >= 0 had lambda_min(x) >= 0.
  std::optional<bool> orthant_in_cone;
  std::optional<RationalVector> orthant_counterexample;
};

// Real-rootedness of t -> h(t e - x): the unit vectors first, then sampled x.
// Witnesses are LineViolation{base = x, direction = e, restriction}.
// With `orthant`, also samples x in [0, 2]^n and counts roots below zero.
// Throws ZeroPolynomial, NotHomogeneous, DimensionMismatch, EOnVanishingLocus.
HyperbolicityResult hyperbolicity_check(const MultiPoly& h, const RationalVector& e, const Sampler& sampler,
                                        bool orthant = false);

}  // namespace poslab
