#include "poslab/stability.hpp"

#include "poslab/error.hpp"

namespace poslab {

Verdict stability_falsifier(const MultiPoly& f, const Sampler& sampler) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "stability test of the zero polynomial");
  const int n = f.nvars();
  const auto un = static_cast<std::size_t>(n);
  std::vector<Interval> box;
  for (int v = 0; v < n; ++v) box.push_back(sampler.box()[static_cast<std::size_t>(v) % sampler.box().size()]);
  for (int v = 0; v < n; ++v) box.push_back(Interval{0, 2, true});
  const Sampler lines = sampler.with_box(std::move(box));

  std::uint64_t effort = 0;
  for (std::uint64_t s = 0; s < lines.count(); ++s) {
    const RationalVector ab = lines.point(s, 2 * n);
    const RationalVector a(ab.begin(), ab.begin() + static_cast<std::ptrdiff_t>(un));
    const RationalVector b(ab.begin() + static_cast<std::ptrdiff_t>(un), ab.end());
    const UniPoly p = restrict_to_line(f, a, b);
    if (p.is_zero()) continue;
    ++effort;
    const RealRootCount roots = sturm_real_root_count(p);
    if (!roots.all_real) return Verdict::fail("stability", "non-real-root", LineViolation{a, b, p, roots.distinct}, effort);
  }
  return Verdict::sampled("stability", effort);
}

HyperbolicityResult hyperbolicity_check(const MultiPoly& h, const RationalVector& e, const Sampler& sampler,
                                        bool orthant) {
  if (h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "hyperbolicity of the zero polynomial");
  if (!predicates(h).is_homogeneous) throw Error(ErrorCode::NotHomogeneous, "hyperbolic polynomials are homogeneous");
  const int n = h.nvars();
  if (static_cast<int>(e.size()) != n) throw Error(ErrorCode::DimensionMismatch, "direction has the wrong length");
  if (evaluate(h, e) == 0) throw Error(ErrorCode::EOnVanishingLocus, "h(e) = 0");

  auto restriction = [&](const RationalVector& x) {
    RationalVector minus_x(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) minus_x[v] = -x[v];
    return restrict_to_line(h, minus_x, e);
  };

  std::uint64_t effort = 0;
  auto test = [&](const RationalVector& x) -> std::optional<Verdict> {
    ++effort;
    const UniPoly p = restriction(x);
    const RealRootCount roots = sturm_real_root_count(p);
    if (roots.all_real) return std::nullopt;
    return Verdict::fail("hyperbolicity", "non-real-root", LineViolation{x, e, p, roots.distinct}, effort);
  };

  HyperbolicityResult out{Verdict::sampled("hyperbolicity", 0), std::nullopt, std::nullopt};
  for (int k = 0; k < n; ++k) {
    RationalVector x(static_cast<std::size_t>(n), Rational(0));
    x[static_cast<std::size_t>(k)] = 1;
    if (auto fail = test(x)) {
      out.verdict = std::move(*fail);
      return out;
    }
  }
  for (std::uint64_t s = 0; s < sampler.count(); ++s)
    if (auto fail = test(sampler.point(s, n))) {
      out.verdict = std::move(*fail);
      return out;
    }
  out.verdict.effort = effort;

  if (orthant) {
    const Sampler cone = sampler.with_box({Interval{0, 2, false}});
    out.orthant_in_cone = true;
    for (std::uint64_t s = 0; s < cone.count(); ++s) {
      RationalVector x = cone.point(s, n);
      const UniPoly p = restriction(x);
      if (!sturm_real_root_count(p).all_real || count_roots_below(p, 0) > 0) {
        out.orthant_in_cone = false;
        out.orthant_counterexample = std::move(x);
        break;
      }
    }
  }
  return out;
}

}  // namespace poslab
