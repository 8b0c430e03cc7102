#include "poslab/lorentzian.hpp"

#include <vector>

#include "poslab/error.hpp"
#include "poslab/matrix.hpp"
#include "poslab/mconvex.hpp"

namespace poslab {

namespace {
constexpr const char* kCheck = "lorentzian";
}

Verdict is_lorentzian(const MultiPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Lorentzian test of the zero polynomial");

  std::uint64_t effort = 0;
  for (const auto& [alpha, c] : f.terms()) {
    ++effort;
    if (c < 0) return Verdict::fail(kCheck, "negative-coefficient", CoefficientViolation{alpha, c}, effort);
  }

  const Exponent& first = f.terms().begin()->first;
  const int d = degree_of(first);
  for (const auto& [alpha, c] : f.terms())
    if (degree_of(alpha) != d) return Verdict::fail(kCheck, "not-homogeneous", DegreeMismatch{first, alpha}, effort);
  if (d <= 1) return Verdict::certified(kCheck, "nonnegative-linear", effort);

  std::vector<Exponent> support;
  for (const auto& [alpha, c] : f.terms()) support.push_back(alpha);
  Verdict mconvex = is_mconvex_set(support);
  effort += mconvex.effort;
  if (!mconvex.ok()) return Verdict::fail(kCheck, "support-not-mconvex", mconvex.witness, effort);

  const Support supp(support.begin(), support.end());
  const std::vector<Rational> origin(static_cast<std::size_t>(f.nvars()), Rational(0));
  for (const Exponent& alpha : dominated_exponents(supp, d - 2)) {
    ++effort;
    const MultiPoly q = derivative(f, alpha);
    if (q.is_zero()) continue;
    const EigenCount count = count_positive_eigenvalues(hessian_at(q, origin));
    if (count.positive > 1)
      return Verdict::fail(kCheck, "hessian-signature",
                           HessianViolation{alpha, count.positive, count.zero, count.negative}, effort);
  }
  return Verdict::certified(kCheck, "eigen-count", effort);
}

}  // namespace poslab
