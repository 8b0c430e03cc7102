#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "poslab/error.hpp"
#include "poslab/lorentzian.hpp"
#include "poslab/positroid.hpp"
#include "poslab/stability.hpp"

using namespace poslab;

namespace {

Mask set_mask(const oracle::Set& s) {
  Mask m = 0;
  for (int x : s) m |= Mask{1} << x;
  return m;
}

oracle::Set set_of(Mask m, int n) {
  oracle::Set s;
  for (int x = 0; x < n; ++x)
    if (m >> x & 1) s.push_back(x);
  return s;
}

// Elements of s listed in the cyclic order starting at `start`.
std::vector<int> shifted(const oracle::Set& s, int start, int n) {
  std::vector<int> pos;
  for (int x : s) pos.push_back((x - start + n) % n);
  std::sort(pos.begin(), pos.end());
  return pos;
}

bool gale_oracle(const oracle::Set& b, const oracle::Set& i, int start, int n) {
  const auto pb = shifted(b, start, n), pi = shifted(i, start, n);
  for (std::size_t r = 0; r < pb.size(); ++r)
    if (pb[r] < pi[r]) return false;
  return true;
}

// Lexicographically first basis in each shifted order.
std::vector<Mask> necklace_oracle(const Matroid& m) {
  const int n = m.size();
  std::vector<Mask> out;
  for (int start = 0; start < n; ++start) {
    std::optional<std::vector<int>> best;
    Mask best_mask = 0;
    for (Mask b : m.bases()) {
      const auto p = shifted(set_of(b, n), start, n);
      if (!best || p < *best) {
        best = p;
        best_mask = b;
      }
    }
    out.push_back(best_mask);
  }
  return out;
}

std::vector<Mask> envelope_oracle(const Matroid& m) {
  const int n = m.size(), k = m.rank();
  const auto nk = necklace_oracle(m);
  std::vector<Mask> out;
  for (const auto& b : oracle::combinations(n, k)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = gale_oracle(b, set_of(nk[static_cast<std::size_t>(i)], n), i, n);
    if (ok) out.push_back(set_mask(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational minor_oracle(const RationalMatrix& a, const oracle::Set& cols) {
  std::vector<std::vector<Rational>> sub(static_cast<std::size_t>(a.rows()));
  for (int r = 0; r < a.rows(); ++r)
    for (int c : cols) sub[static_cast<std::size_t>(r)].push_back(a(r, c));
  return oracle::leibniz_det(sub);
}

// Random totally nonnegative k x n matrix: a Vandermonde matrix on repeated
// parameters, right-multiplied by elementary bidiagonal factors, with some
// columns zeroed.
RationalMatrix random_tnn(std::mt19937_64& rng, int k, int n) {
  std::vector<Rational> params;
  int p = 1;
  while (static_cast<int>(params.size()) < n) {
    params.emplace_back(p);
    if (rng() % 3 != 0) ++p;
  }
  RationalMatrix a(k, n);
  for (int c = 0; c < n; ++c) {
    Rational v = 1;
    for (int r = 0; r < k; ++r) {
      a(r, c) = v;
      v *= params[static_cast<std::size_t>(c)];
    }
  }
  for (int step = 0; step < 3; ++step) {
    RationalMatrix e = RationalMatrix::identity(n);
    const int i = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    e(i, i + 1) = oracle::frac(static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 2));
    a = a * e;
  }
  if (rng() % 3 == 0) {
    const int c = static_cast<int>(rng() % static_cast<unsigned>(n));
    for (int r = 0; r < k; ++r) a(r, c) = 0;
  }
  return a;
}

}  // namespace

TEST_CASE("necklace examples") {
  const Necklace u24 = grassmann_necklace(uniform(2, 4));
  CHECK(u24.k == 2);
  CHECK(u24.n == 4);
  CHECK(u24.entries == std::vector<Mask>{0b0011, 0b0110, 0b1100, 0b1001});
  CHECK(grassmann_necklace(uniform(1, 2)).entries == std::vector<Mask>{0b01, 0b10});
  CHECK(positroid_from_necklace(u24) == uniform(2, 4));
  CHECK(positroid_from_necklace(grassmann_necklace(uniform(1, 2))) == uniform(1, 2));

  const Matroid fano = named("fano");
  const Matroid env = positroid_from_necklace(grassmann_necklace(fano), fano.ground());
  CHECK(env.rank() == 3);
  CHECK(env.basis_count() > fano.basis_count());
}

TEST_CASE("Gale order matches the sorted-position oracle") {
  const int n = 6;
  for (int k = 1; k <= 3; ++k)
    for (const auto& b : oracle::combinations(n, k))
      for (const auto& i : oracle::combinations(n, k))
        for (int start = 0; start < n; ++start)
          CHECK(gale_geq(set_mask(b), set_mask(i), start, n) == gale_oracle(b, i, start, n));
}

TEST_CASE("invalid necklaces are rejected") {
  auto code_of = [](const Necklace& nk) {
    try {
      positroid_from_necklace(nk);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  CHECK(code_of(Necklace{2, 4, {0b0011, 0b0110, 0b1100}}) == ErrorCode::InvalidNecklace);
  CHECK(code_of(Necklace{2, 4, {0b0011, 0b0111, 0b1100, 0b1001}}) == ErrorCode::InvalidNecklace);
  // I_2 must contain I_1 \ {1} = {2}.
  CHECK(code_of(Necklace{2, 4, {0b0011, 0b1100, 0b1100, 0b1001}}) == ErrorCode::InvalidNecklace);
}

TEST_CASE("necklace and envelope agree with brute force on the corpus") {
  std::vector<Matroid> corpus{named("fano"), named("vamos"), named("choe-wagner-L")};
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) corpus.push_back(uniform(k, n));
  for (const Matroid& m : corpus) {
    CAPTURE(m.size());
    const Necklace nk = grassmann_necklace(m);
    CHECK(nk.entries == necklace_oracle(m));
    const Matroid env = positroid_from_necklace(nk, m.ground());
    const auto expected = envelope_oracle(m);
    CHECK(std::set<Mask>(env.bases().begin(), env.bases().end()) == std::set<Mask>(expected.begin(), expected.end()));
    // Round-trip closure.
    for (Mask b : m.bases()) CHECK(env.is_basis(b));
    CHECK(is_positroid(m).ok() == (env.basis_count() == m.basis_count()));
  }
}

TEST_CASE("uniform matroids are positroids; Fano and Vamos are not") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) CHECK(is_positroid(uniform(k, n)).status == Status::PassCertified);
  for (const char* name : {"fano", "vamos"}) {
    const Matroid m = named(name);
    const Verdict v = is_positroid(m);
    REQUIRE(v.status == Status::Fail);
    const auto* w = std::get_if<EnvelopeViolation>(&v.witness);
    REQUIRE(w);
    CHECK_FALSE(m.is_basis(w->basis));
    const auto env = envelope_oracle(m);
    CHECK(std::find(env.begin(), env.end(), w->basis) != env.end());
  }
}

TEST_CASE("loops and coloops") {
  // U(1,2) on {1,2}, a loop 3 and a coloop 4.
  const Matroid m = matroid_from_bases(GroundSet(4), 2, {0b1001, 0b1010});
  REQUIRE(m.is_loop(2));
  REQUIRE(m.is_coloop(3));
  const Necklace nk = grassmann_necklace(m);
  for (Mask entry : nk.entries) {
    CHECK((entry & 0b0100) == 0);
    CHECK((entry & 0b1000) != 0);
  }
  CHECK(nk.entries == necklace_oracle(m));
  CHECK(is_positroid(m).status == Status::PassCertified);

  const Matroid all_loops = matroid_from_bases(GroundSet(3), 0, {0});
  CHECK(grassmann_necklace(all_loops).entries == std::vector<Mask>{0, 0, 0});
  CHECK(is_positroid(all_loops).ok());
  CHECK(is_positroid(uniform(3, 3)).ok());
}

TEST_CASE("representing polynomial examples") {
  MultiPoly expected(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Exponent a(4, 0);
      a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(j)] = 1;
      expected.add_term(a, j - i);
    }
  CHECK(representing_polynomial(RationalMatrix::from_rows({{1, 1, 1, 1}, {1, 2, 3, 4}})) == expected);

  MultiPoly x1x2(2);
  x1x2.add_term({1, 1}, 1);
  CHECK(representing_polynomial(RationalMatrix::identity(2)) == x1x2);

  try {
    representing_polynomial(RationalMatrix::from_rows({{1, 1}, {1, 1}}));
    FAIL("expected RankDeficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
  }
}

TEST_CASE("positroid_of_matrix examples") {
  const std::vector<Rational> params{1, 2, 3, 4};
  const MatrixPositroid v = positroid_of_matrix(vandermonde_matrix(2, params));
  CHECK(v.matroid == uniform(2, 4));
  CHECK(v.verdict.ok());

  const MatrixPositroid neg = positroid_of_matrix(RationalMatrix::from_rows({{1, 0, 1}, {0, 1, -1}}));
  REQUIRE(neg.verdict.status == Status::Fail);
  const auto* w = std::get_if<NegativeMinor>(&neg.verdict.witness);
  REQUIRE(w);
  CHECK(w->minor == -1);
  CHECK(neg.matroid == uniform(2, 3));

  const MatrixPositroid one = positroid_of_matrix(RationalMatrix::from_rows({{1}}));
  CHECK(one.matroid == uniform(1, 1));
  CHECK(one.verdict.ok());
}

TEST_CASE("random totally nonnegative matrices give positroids") {
  std::mt19937_64 rng(31);
  int non_uniform = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(3, n)));
    const RationalMatrix a = random_tnn(rng, k, n);
    if (rank(a) < k) continue;
    CAPTURE(trial);

    const MultiPoly f = representing_polynomial(a);
    std::vector<Mask> support;
    bool tnn = true;
    for (const auto& cols : oracle::combinations(n, k)) {
      const Rational d = minor_oracle(a, cols);
      Exponent alpha(static_cast<std::size_t>(n), 0);
      for (int c : cols) alpha[static_cast<std::size_t>(c)] = 1;
      CHECK(f.coefficient(alpha) == d);
      if (d != 0) support.push_back(set_mask(cols));
      if (d < 0) tnn = false;
    }
    REQUIRE(tnn);

    const MatrixPositroid mp = positroid_of_matrix(a);
    CHECK(mp.verdict.ok());
    CHECK(std::set<Mask>(mp.matroid.bases().begin(), mp.matroid.bases().end()) ==
          std::set<Mask>(support.begin(), support.end()));
    CHECK(is_positroid(mp.matroid).status == Status::PassCertified);
    if (mp.matroid.basis_count() != static_cast<std::size_t>(oracle::combinations(n, k).size())) ++non_uniform;
  }
  CHECK(non_uniform > 20);
}

TEST_CASE("representing polynomials of TNN matrices are stable and Lorentzian") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % 2);
    const RationalMatrix a = random_tnn(rng, k, n);
    if (rank(a) < k) continue;
    const MultiPoly f = representing_polynomial(a);
    CHECK(is_lorentzian(f).status == Status::PassCertified);
    CHECK(stability_falsifier(f, Sampler::signed_box(static_cast<std::uint64_t>(trial), 200)).status ==
          Status::PassSampled);
  }
}

TEST_CASE("matrices with a negative minor give non-stable polynomials") {
  const std::vector<RationalMatrix> curated{
      RationalMatrix::from_rows({{1, 0, 1}, {0, 1, -1}}),
      RationalMatrix::from_rows({{1, 1, 1, 1}, {1, 3, 2, 4}}),
      RationalMatrix::from_rows({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}),
  };
  for (const RationalMatrix& a : curated) {
    const MatrixPositroid mp = positroid_of_matrix(a);
    CHECK(mp.verdict.status == Status::Fail);
    const Verdict v = stability_falsifier(representing_polynomial(a), Sampler::signed_box(1, 1000));
    CHECK(v.status == Status::Fail);
  }
}
