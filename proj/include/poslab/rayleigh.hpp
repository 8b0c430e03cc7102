#pragma once

#include "poslab/multipoly.hpp"
#include "poslab/sampler.hpp"
#include "poslab/verdict.hpp"

namespace poslab {

// Samples per run when the caller does not choose.
constexpr std::uint64_t kDefaultSamples = 1000;

// Delta(i, j, alpha) >= 0 on the nonnegative orthant. Multiaffine f uses alpha = 0
// and i < j; otherwise every alpha with d^alpha f != 0 and i <= j. The all-ones
// point is checked before the sampler's points. Differences whose expansion is
// coefficientwise nonnegative are certified and skipped while sampling.
// Throws ZeroPolynomial, NegativeCoefficientInput, NonpositiveC.
Verdict c_rayleigh_check(const MultiPoly& f, const Rational& c, const Sampler& sampler);

// Delta(i, j, 0) >= 0 on all of R^n for multiaffine f. Certified when every
// difference has only even exponents and nonnegative coefficients. Sampling uses
// the sampler's (signed) box, then the grid {-2,-1,-1/2,0,1/2,1,2}^n when it has
// at most kMaxGridPoints points. Throws NotMultiaffine, NegativeCoefficientInput.
Verdict strongly_rayleigh_check(const MultiPoly& f, const Sampler& sampler);

constexpr std::uint64_t kMaxGridPoints = 1'000'000;

// Grid point `index` of {-2,-1,-1/2,0,1/2,1,2}^n, first coordinate varying slowest.
RationalVector grid_point(std::uint64_t index, int n);

}  // namespace poslab
