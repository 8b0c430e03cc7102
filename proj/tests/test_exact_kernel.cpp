#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "poslab/error.hpp"
#include "poslab/matrix.hpp"
#include "poslab/unipoly.hpp"

using namespace poslab;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  RationalMatrix a(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a(r, c) = entry(rng);
  return a;
}

std::vector<std::vector<Rational>> rows_of(const RationalMatrix& a) {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(a.rows()));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out[static_cast<std::size_t>(r)].push_back(a(r, c));
  return out;
}

// det(lambda I - s) at integer lambdas, interpolated.
oracle::Poly char_poly_oracle(const RationalMatrix& s) {
  const int n = s.rows();
  std::vector<Rational> xs, ys;
  for (int lambda = 0; lambda <= n; ++lambda) {
    auto m = rows_of(s);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            (r == c ? Rational(lambda) : Rational(0)) - m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    xs.emplace_back(lambda);
    ys.push_back(oracle::leibniz_det(m));
  }
  return oracle::interpolate(xs, ys);
}

}  // namespace

TEST_CASE("rational parsing, printing and rounding") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(Rational(-7)) == "-7");
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "2/-3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
  CHECK(round_half_away(oracle::frac(462, 10609), 5) == "0.04355");
  CHECK(round_half_away(oracle::frac(456, 10609), 5) == "0.04298");
  CHECK(round_half_away(Rational(1, 8), 2) == "0.13");
  CHECK(round_half_away(Rational(-1, 8), 2) == "-0.13");
  CHECK(round_half_away(Rational(5, 2), 0) == "3");
  CHECK(round_half_away(Rational(0), 3) == "0.000");
}

TEST_CASE("exact rational powers") {
  Rational out;
  CHECK(rational_power(Rational(1, 4), Rational(1, 2), out));
  CHECK(out == Rational(1, 2));
  CHECK(rational_power(Rational(8), Rational(-2, 3), out));
  CHECK(out == Rational(1, 4));
  CHECK(rational_power(Rational(-27), Rational(1, 3), out));
  CHECK(out == -3);
  CHECK_FALSE(rational_power(Rational(2), Rational(1, 2), out));
  CHECK_FALSE(rational_power(Rational(-4), Rational(1, 2), out));
  CHECK(pow_int(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("univariate arithmetic") {
  const UniPoly p({Rational(2), Rational(-3), Rational(1)});  // t^2 - 3t + 2
  CHECK(p == UniPoly::from_roots({Rational(1), Rational(2)}));
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 2);
  CHECK(p.derivative() == UniPoly({Rational(-3), Rational(2)}));
  const auto [q, r] = divmod(p, UniPoly::from_roots({Rational(1)}));
  CHECK(q == UniPoly::from_roots({Rational(2)}));
  CHECK(r.is_zero());
  CHECK(gcd(p, UniPoly::from_roots({Rational(2), Rational(5)})) == UniPoly::from_roots({Rational(2)}));
  CHECK(squarefree_part(UniPoly::from_roots({Rational(1), Rational(1), Rational(3)})).degree() == 2);
  CHECK_THROWS_AS(divmod(p, UniPoly()), Error);
  CHECK(to_string(p) == "t^2 - 3*t + 2");
}

TEST_CASE("Sturm counting examples") {
  const RealRootCount a = sturm_real_root_count(UniPoly({Rational(1), Rational(0), Rational(1)}));
  CHECK(a.distinct == 0);
  CHECK_FALSE(a.all_real);
  const RealRootCount b = sturm_real_root_count(UniPoly::from_roots({Rational(1), Rational(2)}));
  CHECK(b.distinct == 2);
  CHECK(b.all_real);
  const RealRootCount c = sturm_real_root_count(UniPoly::from_roots({Rational(1), Rational(1)}));
  CHECK(c.distinct == 1);
  CHECK(c.all_real);
  try {
    sturm_real_root_count(UniPoly());
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPolynomial);
  }
  const SturmSequence s(UniPoly::from_roots({Rational(-1), Rational(0), Rational(2)}));
  CHECK(s.count_roots(Rational(-1), Rational(2)) == 2);  // (lo, hi]
  CHECK(s.count_roots(std::nullopt, Rational(0)) == 2);
  CHECK(count_roots_below(UniPoly::from_roots({Rational(-1), Rational(0), Rational(2)}), 0) == 1);
}

TEST_CASE("Sturm counting agrees with known roots and the naive oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> root(-4, 4), count(1, 5), quad(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> roots;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) roots.emplace_back(root(rng), 1 + static_cast<int>(rng() % 3));
    for (auto& r : roots) r.canonicalize();
    UniPoly p = UniPoly::from_roots(roots);
    const int quads = quad(rng);
    for (int i = 0; i < quads; ++i) p = p * UniPoly({Rational(1 + static_cast<int>(rng() % 4)), Rational(root(rng)), Rational(1)});
    std::set<Rational> distinct(roots.begin(), roots.end());
    const RealRootCount got = sturm_real_root_count(p);
    oracle::Poly op(p.coefficients());
    CHECK(got.distinct == oracle::distinct_real_roots(op));
    CHECK(got.all_real == oracle::all_roots_real(op));
    // The quadratic factors t^2 + b t + c may add real roots; only check exactness when none were added.
    if (quads == 0) {
      CHECK(got.distinct == static_cast<int>(distinct.size()));
      CHECK(got.all_real);
    }
  }
}

TEST_CASE("determinants and rank match the Leibniz oracle") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    RationalMatrix a = random_matrix(rng, n, n, -3, 3);
    if (trial % 4 == 0) a(0, 0) = Rational(1, 1 + static_cast<int>(rng() % 5));
    CHECK(determinant(a) == oracle::leibniz_det(rows_of(a)));
  }
  const RationalMatrix singular = RationalMatrix::from_rows({{1, 2}, {2, 4}});
  CHECK(determinant(singular) == 0);
  CHECK(rank(singular) == 1);
  CHECK(rank(RationalMatrix::identity(3)) == 3);
}

TEST_CASE("maximal minors") {
  const PlueckerVector p = maximal_minors(RationalMatrix::from_rows({{1, 1, 1}, {1, 2, 3}}));
  CHECK(p.at(mask_of({0, 1})) == 1);
  CHECK(p.at(mask_of({0, 2})) == 2);
  CHECK(p.at(mask_of({1, 2})) == 1);
  CHECK(maximal_minors(RationalMatrix::identity(2)).at(mask_of({0, 1})) == 1);
  const PlueckerVector v = maximal_minors(RationalMatrix::from_rows({{1, 1, 1, 1}, {1, 2, 3, 4}}));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(v.at(mask_of({i, j})) == j - i);
  try {
    maximal_minors(RationalMatrix::from_rows({{1, 1}, {1, 1}}));
    FAIL("expected RankDeficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
  }
}

TEST_CASE("maximal minors satisfy the three-term Plücker identity") {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int n = k + 2 + static_cast<int>(rng() % (7 - k - 1));
    const RationalMatrix a = random_matrix(rng, k, n, -4, 4);
    if (rank(a) < k) continue;
    const PlueckerVector p = maximal_minors(a);
    for (const auto& s : oracle::combinations(n, k - 2))
      for (const auto& q : oracle::combinations(n, 4)) {
        bool disjoint = true;
        for (int x : q) disjoint = disjoint && !oracle::has(s, x);
        if (!disjoint) continue;
        const Mask sm = mask_of(s);
        auto pp = [&](int x, int y) { return p.at(sm | bit(q[static_cast<std::size_t>(x)]) | bit(q[static_cast<std::size_t>(y)])); };
        // Columns ordered as S then the pair, so every minor carries the same sign convention.
        auto minor_of = [&](oracle::Set cols) {
          std::vector<std::vector<Rational>> m(static_cast<std::size_t>(k));
          for (int r = 0; r < k; ++r)
            for (int c : cols) m[static_cast<std::size_t>(r)].push_back(a(r, c));
          return oracle::leibniz_det(m);
        };
        auto ordered = [&](int x, int y) {
          oracle::Set cols = s;
          cols.push_back(q[static_cast<std::size_t>(x)]);
          cols.push_back(q[static_cast<std::size_t>(y)]);
          return minor_of(cols);
        };
        CHECK(ordered(0, 2) * ordered(1, 3) == ordered(0, 1) * ordered(2, 3) + ordered(0, 3) * ordered(1, 2));
        // Library minors use sorted columns.
        oracle::Set sorted = oracle::set_union(s, {q[0], q[1]});
        CHECK(pp(0, 1) == minor_of(sorted));
        ++checked;
      }
  }
  CHECK(checked > 100);
}

TEST_CASE("total nonnegativity") {
  CHECK(is_totally_nonnegative(RationalMatrix::from_rows({{1, 1, 1, 1}, {1, 2, 3, 4}})).status == Status::PassCertified);
  const Verdict v = is_totally_nonnegative(RationalMatrix::from_rows({{1, 1}, {2, 1}}));
  REQUIRE(v.status == Status::Fail);
  const auto& w = std::get<NegativeMinor>(v.witness);
  CHECK(w.subset == mask_of({0, 1}));
  CHECK(w.minor == -1);
  CHECK(is_totally_nonnegative(RationalMatrix::from_rows({{0, 1, 0}})).ok());
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(RationalMatrix::from_rows({{2, 4}, {4, 2}})) == UniPoly({Rational(-12), Rational(-4), Rational(1)}));
  CHECK(char_poly(RationalMatrix(2, 2)) == UniPoly::monomial(1, 2));
  CHECK(char_poly(RationalMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) ==
        UniPoly({Rational(-2), Rational(-3), Rational(0), Rational(1)}));
  CHECK_THROWS_AS(char_poly(RationalMatrix::from_rows({{0, 1}, {2, 0}})), Error);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    RationalMatrix s = random_matrix(rng, n, n, -3, 3);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < r; ++c) s(r, c) = s(c, r);
    CHECK(char_poly(s).coefficients() == char_poly_oracle(s));
  }
}

TEST_CASE("eigenvalue signs") {
  CHECK(count_positive_eigenvalues(RationalMatrix::from_rows({{2, 4}, {4, 2}})).positive == 1);
  CHECK(count_positive_eigenvalues(RationalMatrix::from_rows({{2, 1}, {1, 2}})).positive == 2);
  const EigenCount e = count_positive_eigenvalues(RationalMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  CHECK(e.positive == 1);
  CHECK(e.negative == 2);
  CHECK(e.zero == 0);
}

TEST_CASE("eigenvalue signs are congruence invariants") {
  // P D P^T has the inertia of D (Sylvester's law of inertia).
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> diag(-2, 2);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    RationalMatrix d(n, n);
    int pos = 0, neg = 0, zero = 0;
    for (int i = 0; i < n; ++i) {
      d(i, i) = diag(rng);
      (d(i, i) > 0 ? pos : d(i, i) < 0 ? neg : zero)++;
    }
    RationalMatrix p = random_matrix(rng, n, n, -2, 2);
    if (determinant(p) == 0) continue;
    RationalMatrix pt(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) pt(r, c) = p(c, r);
    const EigenCount got = count_positive_eigenvalues(p * d * pt);
    CHECK(got.positive == pos);
    CHECK(got.negative == neg);
    CHECK(got.zero == zero);
    CHECK(got.positive + got.negative + got.zero == n);
  }
}

TEST_CASE("Vandermonde matrices") {
  const std::vector<Rational> p4{1, 2, 3, 4};
  CHECK(vandermonde_matrix(2, p4) == RationalMatrix::from_rows({{1, 1, 1, 1}, {1, 2, 3, 4}}));
  const std::vector<Rational> p3{1, 2, 3};
  CHECK(determinant(vandermonde_matrix(3, p3)) == 2);
  const std::vector<Rational> bad{2, 1, 3};
  CHECK_THROWS_AS(vandermonde_matrix(2, bad), Error);
  const std::vector<Rational> nonpositive{0, 1, 3};
  CHECK_THROWS_AS(vandermonde_matrix(2, nonpositive), Error);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 3);
    if (k > n) continue;
    std::vector<Rational> params;
    Rational x = 0;
    for (int i = 0; i < n; ++i) {
      x += Rational(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3));
      x.canonicalize();
      params.push_back(x);
    }
    CHECK(is_totally_nonnegative(vandermonde_matrix(k, params)).ok());
  }
}
