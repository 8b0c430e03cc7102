// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "poslab/lorentzian.hpp"
#include "poslab/matroid.hpp"
#include "poslab/mconvex.hpp"
#include "poslab/positroid.hpp"
#include "poslab/puiseux.hpp"
#include "poslab/rayleigh.hpp"
#include "poslab/stability.hpp"
#include "poslab/tropical.hpp"

using namespace poslab;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note << "failed: " << what << "; ";
    }
  }
};

bool run_criterion(int number, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) {
    o.ok = false;
    o.note << "over time limit; ";
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / limit %.0f s", secs, limit_s);
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << number << ". " << title << " [" << timing << "] "
            << o.note.str() << std::endl;
  return o.ok;
}

Matroid build_l() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 10; ++i) labels.push_back(std::to_string(i));
  labels.push_back("e");
  labels.push_back("f");
  const GroundSet ground(12, labels);
  auto set = [&](std::initializer_list<const char*> names) {
    Mask s = 0;
    for (const char* nm : names) s |= Mask{1} << ground.index_of(nm);
    return s;
  };
  return transversal_matroid(SetSystem{ground,
                                       {set({"1", "2", "3", "4", "f"}), set({"5", "6", "7", "f"}),
                                        set({"8", "9", "10", "f"}), set({"1", "2", "3", "5", "6", "8", "9", "e", "f"})}});
}

std::vector<oracle::Set> bases_as_sets(const Matroid& m) {
  std::vector<oracle::Set> out;
  for (Mask b : m.bases()) {
    oracle::Set s;
    for (int x = 0; x < m.size(); ++x)
      if (b >> x & 1) s.push_back(x);
    out.push_back(s);
  }
  return out;
}

// Delta(i, j, 0) at x by finite differences, exact for multiaffine f.
Rational multiaffine_delta(const MultiPoly& f, const RationalVector& x, int i, int j) {
  auto at = [&](std::optional<int> vi, std::optional<int> vj) {
    RationalVector y = x;
    if (vi) y[static_cast<std::size_t>(i)] = *vi;
    if (vj) y[static_cast<std::size_t>(j)] = *vj;
    return evaluate(f, y);
  };
  const Rational fi = at(1, std::nullopt) - at(0, std::nullopt);
  const Rational fj = at(std::nullopt, 1) - at(std::nullopt, 0);
  const Rational fij = at(1, 1) - at(1, 0) - at(0, 1) + at(0, 0);
  return fi * fj - evaluate(f, x) * fij;
}

MultiPoly binary_quadratic(int a, int b, int c) {
  MultiPoly f(2);
  f.add_term({2, 0}, a);
  f.add_term({1, 1}, b);
  f.add_term({0, 2}, c);
  return f;
}

}  // namespace

int main() {
  int failures = 0;
  auto record = [&](bool ok) { failures += ok ? 0 : 1; };

  record(run_criterion(1, "L correlation values round to 0.04355 > 0.04298", 5, [](Outcome& o) {
    const Matroid l = build_l();
    o.require(l.basis_count() == 309 && l.rank() == 4, "L has 309 bases of rank 4");
    const auto sets = bases_as_sets(l);
    bool found = false;
    for (int i = 0; i < l.size(); ++i)
      for (int j = i + 1; j < l.size(); ++j) {
        const PairStats s = pair_stats(l, i, j);
        const Rational lhs = s.pr_both * s.pr_neither, rhs = s.pr_i_only * s.pr_j_only;
        const oracle::Counts c = oracle::pair_counts(sets, i, j);
        const Rational total2 = Rational(c.total) * c.total;
        o.require(lhs == Rational(c.both * c.neither) / total2, "pr_both*pr_neither matches counting");
        o.require(rhs == Rational(c.i_only * c.j_only) / total2, "pr_i_only*pr_j_only matches counting");
        if (round_half_away(lhs, 5) == "0.04355" && round_half_away(rhs, 5) == "0.04298" && lhs > rhs) {
          found = true;
          o.note << "pair (" << l.ground().label(i) << "," << l.ground().label(j) << "): " << to_string(lhs) << " > "
                 << to_string(rhs) << "; ";
        }
      }
    o.require(found, "a pair with the stated rounded values");
  }));

  record(run_criterion(2, "L is not negatively correlated and not 1-Rayleigh", 10, [](Outcome& o) {
    const Matroid l = build_l();
    o.require(is_negatively_correlated(l).status == Status::Fail, "negative correlation FAIL");
    const MultiPoly f = basis_generating_polynomial(l);
    const Verdict v = c_rayleigh_check(f, 1, Sampler::nonnegative_box(1, kDefaultSamples));
    o.require(v.status == Status::Fail, "1-Rayleigh FAIL");
    const auto* w = std::get_if<PointViolation>(&v.witness);
    o.require(w && w->point == RationalVector(12, Rational(1)), "witness at the all-ones point");
    if (w) {
      o.require(multiaffine_delta(f, w->point, w->i, w->j) == w->value && w->value < 0, "witness re-evaluates");
      o.note << "pair (" << l.ground().label(w->i) << "," << l.ground().label(w->j) << "), Delta = " << to_string(w->value)
             << "; ";
    }
  }));

  record(run_criterion(3, "L is 8/7-Rayleigh on 10^4 nonnegative samples", 300, [](Outcome& o) {
    const MultiPoly f = basis_generating_polynomial(build_l());
    const Verdict v = c_rayleigh_check(f, oracle::frac(8, 7), Sampler::nonnegative_box(1, 10'000));
    o.require(v.status == Status::PassSampled, "PASS_SAMPLED");
    o.require(v.effort >= 10'000, "at least 10^4 points per pair");
    o.note << "effort " << v.effort << "; ";
  }));

  record(run_criterion(4, "positroid recognition", 10, [](Outcome& o) {
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= std::min(3, n); ++k)
        o.require(is_positroid(uniform(k, n)).status == Status::PassCertified, "uniform matroid passes");
    for (const char* name : {"fano", "vamos"}) {
      const Matroid m = named(name);
      const Verdict v = is_positroid(m);
      const auto* w = std::get_if<EnvelopeViolation>(&v.witness);
      o.require(v.status == Status::Fail && w, std::string(name) + " fails with a witness");
      if (!w) continue;
      const Matroid env = positroid_from_necklace(grassmann_necklace(m), m.ground());
      o.require(env.is_basis(w->basis) && !m.is_basis(w->basis), "witness is in the envelope but not in m");
      o.note << name << " witness " << m.ground().format(w->basis) << "; ";
    }
  }));

  record(run_criterion(5, "Puiseux Vandermonde pipeline", 60, [](Outcome& o) {
    const std::vector<Rational> exps{3, 2, 1, 0};
    const PuiseuxMatrix v = puiseux_vandermonde(2, exps);
    for (const auto& [cols, minor] : puiseux_maximal_minors(v))
      o.require(!minor.is_zero() && minor.leading_coefficient() > 0, "positive leading coefficients");
    const PuiseuxMultiPoly f = representing_polynomial(v);
    WeightVector w;
    w.n = 4;
    for (const auto& [alpha, val] : tropicalize(f).min_plus.values) w.values[mask_of_exponent(alpha)] = val;
    const std::vector<Rational> expected{2, 1, 0, 1, 0, 0};
    std::vector<Rational> got;
    for (const auto& [mask, val] : w.values) got.push_back(val);
    o.require(got == expected, "weights (2,1,0,1,0,0)");
    const Matroid m = uniform(2, 4);
    o.require(is_in_dressian(m, w).ok(), "Dressian");
    o.require(is_in_positive_dressian(m, w).ok(), "positive Dressian");
    for (const Rational& t0 : {oracle::frac(1, 2), oracle::frac(1, 4), oracle::frac(1, 8)}) {
      const MultiPoly ft = f.evaluate(t0);
      o.require(is_lorentzian(ft).status == Status::PassCertified, "Lorentzian at t0");
      const Verdict s = stability_falsifier(ft, Sampler::signed_box(1, 1000));
      o.require(s.status == Status::PassSampled && s.effort >= 1000, "stable on 10^3 lines");
    }
  }));

  record(run_criterion(6, "Fano is not strongly Rayleigh (exact witness)", 600, [](Outcome& o) {
    const MultiPoly f = basis_generating_polynomial(named("fano"));
    const Verdict v = strongly_rayleigh_check(f, Sampler::signed_box(1, 100'000));
    const auto* w = std::get_if<PointViolation>(&v.witness);
    o.require(v.status == Status::Fail && w, "FAIL with a point witness");
    if (!w) return;
    o.require(w->i != w->j, "distinct pair");
    const Rational delta = multiaffine_delta(f, w->point, w->i, w->j);
    o.require(delta == w->value && delta < 0, "witness re-verifies exactly");
    o.note << "Delta = " << to_string(delta) << " after " << v.effort << " points; ";
  }));

  record(run_criterion(7, "Dressian membership equals valuated-matroid test on 1000 weights", 30, [](Outcome& o) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> value(-3, 3);
    const Matroid m = uniform(2, 4);
    int agree = 0, valuated = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      WeightVector w;
      w.n = 4;
      std::map<oracle::Set, Rational> brute;
      for (Mask b : m.bases()) {
        const int v = value(rng);
        w.values[b] = v;
        oracle::Set s;
        for (int x = 0; x < 4; ++x)
          if (b >> x & 1) s.push_back(x);
        brute[s] = v;
      }
      const bool d = is_in_dressian(m, w).ok();
      const bool vm = is_valuated_matroid(w.as_function()).verdict.ok();
      o.require(d == oracle::three_term_relations(4, 2, brute), "Dressian matches brute force");
      if (d == vm) ++agree;
      if (vm) ++valuated;
    }
    o.require(agree == 1000, "100% agreement");
    o.note << agree << "/1000 agree, " << valuated << " valuated; ";
  }));

  record(run_criterion(8, "exact Lorentzian checks", 30, [](Outcome& o) {
    o.require(is_lorentzian(binary_quadratic(1, 4, 1)).status == Status::PassCertified, "x1^2+4x1x2+x2^2 passes");
    o.require(is_lorentzian(binary_quadratic(1, 1, 1)).status == Status::Fail, "x1^2+x1x2+x2^2 fails");
    int count = 0;
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= n; ++k, ++count)
        o.require(is_lorentzian(basis_generating_polynomial(uniform(k, n))).status == Status::PassCertified,
                  "uniform basis polynomial passes");
    o.note << count << " uniform matroids; ";
  }));

  record(run_criterion(9, "valuated flags and their lifts", 5, [](Outcome& o) {
    for (int n = 3; n <= 5; ++n) {
      std::vector<FlagConstituent> chain;
      for (int k = 1; k < n; ++k) chain.push_back({uniform(k, n), zero_weights(uniform(k, n))});
      const FlagChain flag{chain};
      o.require(is_valuated_flag(flag).status == Status::PassCertified, "uniform flag passes");
      const auto lifts = flag_lorentzian_lift(flag);
      for (std::size_t i = 0; i < lifts.size(); ++i)
        o.require(tropicalize(lifts[i]).min_plus.values == chain[i].weights.as_function().values,
                  "lift tropicalizes back");
    }
    const Matroid single = matroid_from_bases(GroundSet(3), 1, {0b001});
    const FlagChain bad{{{single, zero_weights(single)}, {uniform(2, 3), zero_weights(uniform(2, 3))}}};
    const Verdict v = is_valuated_flag(bad);
    const auto* w = std::get_if<IncidenceViolation>(&v.witness);
    o.require(v.status == Status::Fail && w && w->s == 0 && w->t == 0b111, "non-flag fails at S = {}, T = {1,2,3}");
  }));

  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
