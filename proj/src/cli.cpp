#include "poslab/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "poslab/error.hpp"
#include "poslab/io.hpp"
#include "poslab/lorentzian.hpp"
#include "poslab/matroid.hpp"
#include "poslab/positroid.hpp"
#include "poslab/puiseux.hpp"
#include "poslab/rayleigh.hpp"
#include "poslab/report.hpp"
#include "poslab/sampler.hpp"
#include "poslab/stability.hpp"
#include "poslab/tropical.hpp"

namespace poslab {

namespace {

struct Options {
  std::string json_path;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = kDefaultSamples;
  bool timing = false;

  std::string matroid, poly, matrix, weights, chain, emit;
  std::string c = "1";
  std::string e;
  std::string t0;
  std::string name;
  bool positive = false;
  bool orthant = false;
};

[[noreturn]] void usage(const std::string& message) { throw Error(ErrorCode::Usage, message); }

Status worst(std::initializer_list<Status> statuses) {
  Status out = Status::PassCertified;
  for (Status s : statuses) {
    if (s == Status::Fail) return Status::Fail;
    if (s == Status::PassSampled) out = Status::PassSampled;
  }
  return out;
}

std::string exact_and_rounded(const Rational& q) { return to_string(q) + " (~" + round_half_away(q, 5) + ")"; }

// Records a verdict in the report and prints its summary.
void emit_verdict(Report& report, std::ostream& out, const std::string& name, const Verdict& v,
                  const GroundSet& ground) {
  report.add_verdict(name, v, ground);
  out << describe(v, ground);
}

Matroid load_matroid(const std::string& path, Report& report) {
  LoadedFile file = load_json_file(path);
  report.add_input("matroid", file);
  return matroid_from_json(file.json);
}

// Rational or Puiseux coefficients; the latter are evaluated at --t0.
MultiPoly read_poly(const Json& j, const Options& o) {
  if (!has_puiseux_coefficients(j)) {
    if (!o.t0.empty()) usage("--t0 applies only to polynomials with Puiseux coefficients");
    return poly_from_json(j);
  }
  if (o.t0.empty()) usage("polynomial has Puiseux coefficients; pass --t0 to evaluate them");
  return puiseux_poly_from_json(j).evaluate(parse_rational(o.t0));
}

struct Target {
  MultiPoly f;
  GroundSet ground;
};

Target load_target(const Options& o, Report& report) {
  if (o.matroid.empty() == o.poly.empty()) usage("give exactly one of --matroid or --poly");
  if (!o.matroid.empty()) {
    Matroid m = load_matroid(o.matroid, report);
    return {basis_generating_polynomial(m), m.ground()};
  }
  LoadedFile file = load_json_file(o.poly);
  report.add_input("poly", file);
  MultiPoly f = read_poly(file.json, o);
  return {std::move(f), GroundSet(f.nvars())};
}

void cmd_validate(const Options& o, Report& report, std::ostream& out) {
  if (o.matroid.empty()) usage("validate needs --matroid");
  LoadedFile file = load_json_file(o.matroid);
  report.add_input("matroid", file);
  const Json& j = file.json;
  Verdict v;
  std::optional<Matroid> m;
  if (j.is_object() && j.contains("family")) {
    m = matroid_from_json(j);
  } else {
    // Check cardinalities here so the witness can name both sets.
    if (!j.is_object() || !j.contains("n") || !j.contains("bases")) throw Error(ErrorCode::Parse, "matroid needs n and bases");
    GroundSet ground(j.at("n").get<int>());
    std::vector<Mask> bases;
    for (const Json& b : j.at("bases")) bases.push_back(set_from_json(b, ground));
    for (Mask b : bases)
      if (!bases.empty() && cardinality(b) != cardinality(bases.front())) {
        v = Verdict::fail("basis-exchange", "mixed-cardinality",
                          DegreeMismatch{indicator(bases.front(), ground.n), indicator(b, ground.n)}, bases.size());
        break;
      }
    if (v.status != Status::Fail) {
      try {
        m = matroid_from_json(j);
      } catch (const ExchangeFailureError& e) {
        v = Verdict::fail("basis-exchange", "exchange-axiom",
                          BasisExchangeViolation{e.first(), e.second(), e.removed()}, bases.size());
      }
    }
  }
  if (m) {
    v = Verdict::certified("basis-exchange", "exhaustive-exchange", m->basis_count());
    out << "matroid: n=" << m->size() << " rank=" << m->rank() << " bases=" << m->basis_count() << "\n";
    report.details()["n"] = m->size();
    report.details()["rank"] = m->rank();
    report.details()["bases"] = m->basis_count();
  }
  emit_verdict(report, out, "validate", v, m ? m->ground() : GroundSet());
  report.set_top("validate", v.status);
}

void cmd_positroid(const Options& o, Report& report, std::ostream& out) {
  if (o.matroid.empty() == o.matrix.empty()) usage("give exactly one of --matroid or --matrix");
  if (!o.matroid.empty()) {
    const Matroid m = load_matroid(o.matroid, report);
    const Necklace nk = grassmann_necklace(m);
    Json necklace = Json::array();
    out << "necklace:";
    for (Mask s : nk.entries) {
      out << " " << m.ground().format(s);
      necklace.push_back(set_to_json(s));
    }
    out << "\n";
    const Matroid envelope = positroid_from_necklace(nk, m.ground());
    out << "bases: " << m.basis_count() << ", necklace positroid bases: " << envelope.basis_count() << "\n";
    report.details()["necklace"] = necklace;
    report.details()["bases"] = m.basis_count();
    report.details()["envelope_bases"] = envelope.basis_count();
    const Verdict v = is_positroid(m);
    emit_verdict(report, out, "positroid", v, m.ground());
    report.set_top("positroid", v.status);
    if (!o.emit.empty()) write_text_file(o.emit, matroid_to_json(m).dump(2) + "\n");
    return;
  }
  LoadedFile file = load_json_file(o.matrix);
  report.add_input("matrix", file);
  const RationalMatrix a = matrix_from_json(file.json);
  const MatrixPositroid mp = positroid_of_matrix(a);
  out << "column matroid: n=" << mp.matroid.size() << " rank=" << mp.matroid.rank()
      << " bases=" << mp.matroid.basis_count() << "\n";
  report.details()["matroid"] = matroid_to_json(mp.matroid);
  emit_verdict(report, out, "totally-nonnegative", mp.verdict, mp.matroid.ground());
  report.set_top("totally-nonnegative", mp.verdict.status);
  if (mp.verdict.ok()) emit_verdict(report, out, "positroid", is_positroid(mp.matroid), mp.matroid.ground());
  if (!o.emit.empty()) write_text_file(o.emit, matroid_to_json(mp.matroid).dump(2) + "\n");
}

void cmd_balanced(const Options& o, Report& report, std::ostream& out) {
  if (o.matroid.empty()) usage("balanced needs --matroid");
  const Matroid m = load_matroid(o.matroid, report);
  const Verdict v = is_balanced(m);
  emit_verdict(report, out, "balanced", v, m.ground());
  report.set_top("balanced", v.status);
}

void print_pairs(const CorrelationViolation& w, const GroundSet& g, std::ostream& out) {
  for (const PairViolation& p : w.pairs) {
    const Rational lhs = p.stats.pr_both * p.stats.pr_neither;
    const Rational rhs = p.stats.pr_i_only * p.stats.pr_j_only;
    out << "pair (" << g.label(p.i) << "," << g.label(p.j) << "): Pr(both)Pr(neither) = " << exact_and_rounded(lhs)
        << " > Pr(" << g.label(p.i) << " only)Pr(" << g.label(p.j) << " only) = " << exact_and_rounded(rhs) << "\n";
  }
}

void record_pairs(const CorrelationViolation& w, const GroundSet& g, Report& report) {
  Json pairs = Json::array();
  for (const PairViolation& p : w.pairs) {
    const Rational lhs = p.stats.pr_both * p.stats.pr_neither;
    const Rational rhs = p.stats.pr_i_only * p.stats.pr_j_only;
    pairs.push_back({{"i", g.label(p.i)},
                     {"j", g.label(p.j)},
                     {"both_times_neither", rational_to_json(lhs)},
                     {"both_times_neither_5dp", round_half_away(lhs, 5)},
                     {"i_only_times_j_only", rational_to_json(rhs)},
                     {"i_only_times_j_only_5dp", round_half_away(rhs, 5)}});
  }
  report.details()["positively_correlated_pairs"] = pairs;
}

void cmd_correlated(const Options& o, Report& report, std::ostream& out) {
  if (o.matroid.empty()) usage("correlated needs --matroid");
  const Matroid m = load_matroid(o.matroid, report);
  const Verdict v = is_negatively_correlated(m);
  if (const auto* w = std::get_if<CorrelationViolation>(&v.witness)) {
    print_pairs(*w, m.ground(), out);
    record_pairs(*w, m.ground(), report);
  }
  emit_verdict(report, out, "negatively-correlated", v, m.ground());
  report.set_top("negatively-correlated", v.status);
}

void cmd_rayleigh(const Options& o, Report& report, std::ostream& out) {
  const Target t = load_target(o, report);
  const Rational c = parse_rational(o.c);
  report.set_sampling(o.seed, o.samples);
  report.details()["c"] = rational_to_json(c);
  const Verdict v = c_rayleigh_check(t.f, c, Sampler::nonnegative_box(o.seed, o.samples));
  emit_verdict(report, out, "c-rayleigh", v, t.ground);
  report.set_top("c-rayleigh", v.status);
}

void cmd_strong_rayleigh(const Options& o, Report& report, std::ostream& out) {
  const Target t = load_target(o, report);
  report.set_sampling(o.seed, o.samples);
  const Verdict v = strongly_rayleigh_check(t.f, Sampler::signed_box(o.seed, o.samples));
  emit_verdict(report, out, "strongly-rayleigh", v, t.ground);
  report.set_top("strongly-rayleigh", v.status);
}

void cmd_stable(const Options& o, Report& report, std::ostream& out) {
  const Target t = load_target(o, report);
  report.set_sampling(o.seed, o.samples);
  const Verdict v = stability_falsifier(t.f, Sampler::signed_box(o.seed, o.samples));
  emit_verdict(report, out, "stability", v, t.ground);
  report.set_top("stability", v.status);
}

void cmd_lorentzian(const Options& o, Report& report, std::ostream& out) {
  const Target t = load_target(o, report);
  const Verdict v = is_lorentzian(t.f);
  emit_verdict(report, out, "lorentzian", v, t.ground);
  report.set_top("lorentzian", v.status);
}

void cmd_hyperbolic(const Options& o, Report& report, std::ostream& out) {
  if (o.poly.empty() || o.e.empty()) usage("hyperbolic needs --poly and --e");
  LoadedFile file = load_json_file(o.poly);
  report.add_input("poly", file);
  const MultiPoly h = read_poly(file.json, o);
  const RationalVector e = parse_vector(o.e);
  report.set_sampling(o.seed, o.samples);
  report.details()["e"] = vector_to_json(e);
  const HyperbolicityResult r = hyperbolicity_check(h, e, Sampler::signed_box(o.seed, o.samples), o.orthant);
  emit_verdict(report, out, "hyperbolicity", r.verdict, GroundSet(h.nvars()));
  report.set_top("hyperbolicity", r.verdict.status);
  if (r.orthant_in_cone) {
    out << "orthant inside hyperbolicity cone (sampled): " << (*r.orthant_in_cone ? "consistent" : "violated") << "\n";
    report.details()["orthant_in_cone"] = *r.orthant_in_cone;
    if (r.orthant_counterexample) {
      out << "  counterexample: " << vector_to_json(*r.orthant_counterexample).dump() << "\n";
      report.details()["orthant_counterexample"] = vector_to_json(*r.orthant_counterexample);
    }
  }
}

struct WeightedMatroid {
  Matroid matroid;
  WeightVector weights;
};

WeightedMatroid load_weights(const Options& o, Report& report) {
  if (o.weights.empty()) usage("--weights is required");
  std::optional<Matroid> m;
  if (!o.matroid.empty()) m = load_matroid(o.matroid, report);
  LoadedFile file = load_json_file(o.weights);
  report.add_input("weights", file);
  WeightVector w = weights_from_json(file.json, m ? &m->ground() : nullptr);
  if (!m) m = w.support_matroid();
  return {std::move(*m), std::move(w)};
}

void cmd_dressian(const Options& o, Report& report, std::ostream& out) {
  const WeightedMatroid wm = load_weights(o, report);
  const Verdict v = o.positive ? is_in_positive_dressian(wm.matroid, wm.weights) : is_in_dressian(wm.matroid, wm.weights);
  const std::string name = o.positive ? "positive-dressian" : "dressian";
  emit_verdict(report, out, name, v, wm.matroid.ground());
  report.set_top(name, v.status);
}

void cmd_flag(const Options& o, Report& report, std::ostream& out) {
  if (o.chain.empty()) usage("flag needs --chain");
  LoadedFile file = load_json_file(o.chain);
  report.add_input("chain", file);
  const FlagChain chain = chain_from_json(file.json);
  const Verdict v = is_valuated_flag(chain);
  emit_verdict(report, out, "valuated-flag", v, chain.constituents.front().matroid.ground());
  report.set_top("valuated-flag", v.status);
  if (!v.ok()) return;
  Json lifts = Json::array();
  for (const PuiseuxMultiPoly& f : flag_lorentzian_lift(chain)) {
    out << "lift: " << to_string(f) << "\n";
    lifts.push_back(puiseux_poly_to_json(f));
  }
  report.details()["lifts"] = lifts;
}

void cmd_lift(const Options& o, Report& report, std::ostream& out) {
  const WeightedMatroid wm = load_weights(o, report);
  const GroundSet& g = wm.matroid.ground();
  const Verdict dressian = is_in_dressian(wm.matroid, wm.weights);
  emit_verdict(report, out, "dressian", dressian, g);
  report.set_top("dressian", dressian.status);
  if (!dressian.ok()) {
    out << "weights are not a valuated matroid; no lift\n";
    return;
  }
  const PuiseuxMultiPoly f = lift_to_lorentzian(wm.matroid, wm.weights);
  out << "lift: " << to_string(f) << "\n";
  report.details()["lift"] = puiseux_poly_to_json(f);
  const bool round_trip = tropicalize(f).min_plus.values == wm.weights.as_min_plus().as_function().values;
  out << "tropicalization round trip: " << (round_trip ? "exact" : "MISMATCH") << "\n";
  report.details()["round_trip"] = round_trip;
  if (!o.emit.empty()) write_text_file(o.emit, puiseux_poly_to_json(f).dump(2) + "\n");

  if (!o.t0.empty()) {
    const Rational t0 = parse_rational(o.t0);
    const Verdict v = is_lorentzian(f.evaluate(t0));
    out << "t0 = " << to_string(t0) << ": ";
    emit_verdict(report, out, "lorentzian@" + to_string(t0), v, g);
    return;
  }
  const LorentzianSchedule schedule = lorentzian_schedule(f);
  for (const ScheduleEntry& entry : schedule.entries) {
    out << "t0 = " << to_string(entry.t0) << ": ";
    emit_verdict(report, out, "lorentzian@" + to_string(entry.t0), entry.verdict, g);
  }
  out << "schedule verdict stable: " << (schedule.stable ? "yes" : "no") << "\n";
  report.details()["schedule_stable"] = schedule.stable;
}

void reproduce_choe_wagner(const Options& o, Report& report, std::ostream& out) {
  const Matroid l = named("choe-wagner-L");
  const GroundSet& g = l.ground();
  out << "L: n=" << l.size() << " rank=" << l.rank() << " bases=" << l.basis_count() << "\n";
  const Verdict corr = is_negatively_correlated(l);
  if (const auto* w = std::get_if<CorrelationViolation>(&corr.witness)) {
    print_pairs(*w, g, out);
    record_pairs(*w, g, report);
  }
  emit_verdict(report, out, "negatively-correlated", corr, g);

  const MultiPoly f = basis_generating_polynomial(l);
  report.set_sampling(o.seed, o.samples);
  const Verdict one = c_rayleigh_check(f, 1, Sampler::nonnegative_box(o.seed, o.samples));
  out << "c = 1: ";
  emit_verdict(report, out, "1-rayleigh", one, g);
  const Verdict eight_sevenths = c_rayleigh_check(f, Rational(8, 7), Sampler::nonnegative_box(o.seed, o.samples));
  out << "c = 8/7: ";
  emit_verdict(report, out, "8/7-rayleigh", eight_sevenths, g);
  report.set_top("1-rayleigh", one.status);
}

void reproduce_fano(const Options&, Report& report, std::ostream& out) {
  const Matroid fano = named("fano");
  const Necklace nk = grassmann_necklace(fano);
  out << "necklace:";
  for (Mask s : nk.entries) out << " " << fano.ground().format(s);
  out << "\n";
  out << "bases: " << fano.basis_count() << ", necklace positroid bases: "
      << positroid_from_necklace(nk).basis_count() << "\n";
  const Verdict v = is_positroid(fano);
  emit_verdict(report, out, "positroid", v, fano.ground());
  report.set_top("positroid", v.status);
}

void reproduce_vamos(const Options& o, Report& report, std::ostream& out) {
  const Matroid vamos = named("vamos");
  out << "Vamos: n=" << vamos.size() << " rank=" << vamos.rank() << " bases=" << vamos.basis_count() << "\n";
  emit_verdict(report, out, "negatively-correlated", is_negatively_correlated(vamos), vamos.ground());
  report.set_sampling(o.seed, o.samples);
  const Verdict v = c_rayleigh_check(basis_generating_polynomial(vamos), 1, Sampler::nonnegative_box(o.seed, o.samples));
  emit_verdict(report, out, "1-rayleigh", v, vamos.ground());
  report.set_top("1-rayleigh", v.status);
}

void reproduce_vandermonde(const Options& o, Report& report, std::ostream& out) {
  const std::vector<Rational> exponents{3, 2, 1, 0};
  const PuiseuxMatrix p = puiseux_vandermonde(2, exponents);
  const PuiseuxMultiPoly f = representing_polynomial(p);
  out << "representing polynomial: " << to_string(f) << "\n";
  const Tropicalization trop = tropicalize(f);
  bool positive_leading = true;
  for (const auto& [alpha, s] : trop.leading_sign) positive_leading = positive_leading && s > 0;
  out << "leading coefficients positive: " << (positive_leading ? "yes" : "no") << "\n";

  WeightVector w{4, Convention::MinPlus, {}};
  Json weights = Json::array();
  for (const auto& [alpha, ord] : trop.min_plus.values) {
    w.values.emplace(mask_of_exponent(alpha), ord);
  }
  for (const auto& [s, v] : w.values) weights.push_back({{"set", set_to_json(s)}, {"value", rational_to_json(v)}});
  out << "weights:";
  for (const auto& [s, v] : w.values) out << " " << format_set(s) << "=" << to_string(v);
  out << "\n";
  report.details()["weights"] = weights;
  report.details()["positive_leading"] = positive_leading;

  const Matroid m = w.support_matroid();
  const Verdict dr = is_in_dressian(m, w);
  emit_verdict(report, out, "dressian", dr, m.ground());
  const Verdict pdr = is_in_positive_dressian(m, w);
  emit_verdict(report, out, "positive-dressian", pdr, m.ground());

  std::vector<Status> statuses{dr.status, pdr.status, positive_leading ? Status::PassCertified : Status::Fail};
  report.set_sampling(o.seed, o.samples);
  for (const Rational& t0 : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
    const MultiPoly ft = f.evaluate(t0);
    out << "t0 = " << to_string(t0) << ": ";
    const Verdict lor = is_lorentzian(ft);
    emit_verdict(report, out, "lorentzian@" + to_string(t0), lor, m.ground());
    out << "t0 = " << to_string(t0) << ": ";
    const Verdict st = stability_falsifier(ft, Sampler::signed_box(o.seed, o.samples));
    emit_verdict(report, out, "stability@" + to_string(t0), st, m.ground());
    statuses.push_back(lor.status);
    statuses.push_back(st.status);
  }
  Status top = Status::PassCertified;
  for (Status s : statuses) top = worst({top, s});
  report.set_top("pipeline", top);
}

using Reproducer = void (*)(const Options&, Report&, std::ostream&);

const std::vector<std::pair<std::string, Reproducer>>& reproducers() {
  static const std::vector<std::pair<std::string, Reproducer>> table{
      {"choe-wagner-L", reproduce_choe_wagner},
      {"fano-not-positroid", reproduce_fano},
      {"vamos-rayleigh-sample", reproduce_vamos},
      {"vandermonde-positroid-pipeline", reproduce_vandermonde},
  };
  return table;
}

void cmd_reproduce(const Options& o, Report& report, std::ostream& out) {
  for (const auto& [name, fn] : reproducers())
    if (name == o.name) {
      fn(o, report, out);
      return;
    }
  usage("unknown reproduction '" + o.name + "'");
}

std::uint64_t default_seed() {
  const char* env = std::getenv("POSLAB_SEED");
  if (!env || !*env) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return seed;
  } catch (const std::exception&) {
    usage(std::string("POSLAB_SEED is not an unsigned integer: ") + env);
  }
}

void write_report(const Options& o, const Json& j) {
  if (!o.json_path.empty()) write_text_file(o.json_path, j.dump(2) + "\n");
}

}  // namespace

std::vector<std::string> reproduce_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : reproducers()) out.push_back(name);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::vector<std::string> command{"poslab"};
  command.insert(command.end(), args.begin(), args.end());

  CLI::App app{"Exact checks for matroids, positroids, Lorentzian and stable polynomials, and tropical Plücker relations",
               "poslab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--json", o.json_path, "Write a JSON report to this file");
  CLI::Option* seed_opt = app.add_option("--seed", o.seed, "Sampler seed (default: POSLAB_SEED or 1)");
  app.add_option("--samples", o.samples, "Sample budget")->capture_default_str();
  app.add_flag("--timing", o.timing, "Print and record wall time");

  auto matroid_or_poly = [&](CLI::App* sub) {
    sub->add_option("--matroid", o.matroid, "Matroid JSON (basis generating polynomial is checked)");
    sub->add_option("--poly", o.poly, "Polynomial JSON");
    sub->add_option("--t0", o.t0, "Evaluate Puiseux coefficients at this t0");
  };

  std::vector<std::pair<CLI::App*, std::function<void(const Options&, Report&, std::ostream&)>>> handlers;

  CLI::App* validate = app.add_subcommand("validate", "Check the basis exchange axiom");
  validate->add_option("--matroid", o.matroid, "Matroid JSON")->required();
  handlers.emplace_back(validate, cmd_validate);

  CLI::App* positroid = app.add_subcommand("positroid", "Positroid recognition by Grassmann necklace round trip");
  positroid->add_option("--matroid", o.matroid, "Matroid JSON");
  positroid->add_option("--matrix", o.matrix, "Matrix JSON: check total nonnegativity of maximal minors");
  positroid->add_option("--emit-matroid", o.emit, "Write the (column) matroid JSON here");
  handlers.emplace_back(positroid, cmd_positroid);

  CLI::App* balanced = app.add_subcommand("balanced", "Negative correlation of every minor");
  balanced->add_option("--matroid", o.matroid, "Matroid JSON")->required();
  handlers.emplace_back(balanced, cmd_balanced);

  CLI::App* correlated = app.add_subcommand("correlated", "Negative correlation of element pairs");
  correlated->add_option("--matroid", o.matroid, "Matroid JSON")->required();
  handlers.emplace_back(correlated, cmd_correlated);

  CLI::App* rayleigh = app.add_subcommand("rayleigh", "c-Rayleigh test on the nonnegative orthant");
  matroid_or_poly(rayleigh);
  rayleigh->add_option("--c", o.c, "Rayleigh constant p/q")->capture_default_str();
  handlers.emplace_back(rayleigh, cmd_rayleigh);

  CLI::App* strong = app.add_subcommand("strong-rayleigh", "Strong Rayleigh test on R^n");
  matroid_or_poly(strong);
  handlers.emplace_back(strong, cmd_strong_rayleigh);

  CLI::App* stable = app.add_subcommand("stable", "Line-restriction stability falsifier");
  matroid_or_poly(stable);
  handlers.emplace_back(stable, cmd_stable);

  CLI::App* lorentzian = app.add_subcommand("lorentzian", "Exact Lorentzian test");
  matroid_or_poly(lorentzian);
  handlers.emplace_back(lorentzian, cmd_lorentzian);

  CLI::App* hyperbolic = app.add_subcommand("hyperbolic", "Hyperbolicity line test in direction e");
  hyperbolic->add_option("--poly", o.poly, "Polynomial JSON")->required();
  hyperbolic->add_option("--e", o.e, "Direction, comma separated rationals")->required();
  hyperbolic->add_option("--t0", o.t0, "Evaluate Puiseux coefficients at this t0");
  hyperbolic->add_flag("--orthant", o.orthant, "Also test that the nonnegative orthant lies in the cone");
  handlers.emplace_back(hyperbolic, cmd_hyperbolic);

  CLI::App* dressian = app.add_subcommand("dressian", "Tropical three-term Plücker relations");
  dressian->add_option("--weights", o.weights, "Weights JSON")->required();
  dressian->add_option("--matroid", o.matroid, "Support matroid JSON (default: finite entries)");
  dressian->add_flag("--positive", o.positive, "Positive relations (support must be a positroid)");
  handlers.emplace_back(dressian, cmd_dressian);

  CLI::App* flag = app.add_subcommand("flag", "Tropical incidence relations of a chain");
  flag->add_option("--chain", o.chain, "Chain JSON")->required();
  handlers.emplace_back(flag, cmd_flag);

  CLI::App* lift = app.add_subcommand("lift", "Puiseux lift of a valuated matroid");
  lift->add_option("--weights", o.weights, "Weights JSON")->required();
  lift->add_option("--matroid", o.matroid, "Support matroid JSON (default: finite entries)");
  lift->add_option("--t0", o.t0, "Evaluate at this t0 instead of the 2^-m schedule");
  lift->add_option("--emit-poly", o.emit, "Write the lifted polynomial JSON here");
  handlers.emplace_back(lift, cmd_lift);

  CLI::App* reproduce = app.add_subcommand("reproduce", "Run a named reproduction");
  reproduce->add_option("name", o.name, "One of: choe-wagner-L, fano-not-positroid, vamos-rayleigh-sample, "
                                        "vandermonde-positroid-pipeline")
      ->required();
  handlers.emplace_back(reproduce, cmd_reproduce);

  Report report(command);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (seed_opt->count() == 0) o.seed = default_seed();
    const auto start = std::chrono::steady_clock::now();
    for (auto& [sub, handler] : handlers)
      if (sub->parsed()) handler(o, report, out);
    if (o.timing) {
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report.set_wall_time_ms(ms);
      out << "wall time: " << ms << " ms\n";
    }
    write_report(o, report.to_json());
    return report.exit_code();
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    Json j{{"command", command}, {"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}, {"exit_code", 2}};
    try {
      write_report(o, j);
    } catch (const Error&) {
    }
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: Parse: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace poslab
