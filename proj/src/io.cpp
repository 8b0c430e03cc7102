#include "poslab/io.hpp"

#include <fstream>
#include <sstream>

#include "poslab/error.hpp"

namespace poslab {

namespace {

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorCode::Parse, message); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_error(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) parse_error(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

std::vector<std::string> labels_from_json(const Json& j) {
  std::vector<std::string> labels;
  if (!j.contains("labels")) return labels;
  for (const Json& l : j.at("labels")) {
    if (l.is_string()) labels.push_back(l.get<std::string>());
    else if (l.is_number_integer()) labels.push_back(std::to_string(l.get<long long>()));
    else parse_error("labels must be strings");
  }
  return labels;
}

struct WitnessJson {
  const GroundSet& ground;

  Json operator()(const std::monostate&) const { return nullptr; }
  Json operator()(const BasisExchangeViolation& w) const {
    return {{"kind", "basis-exchange"}, {"first", set_to_json(w.first)}, {"second", set_to_json(w.second)},
            {"removed", w.removed + 1}};
  }
  Json operator()(const NegativeMinor& w) const {
    return {{"kind", "negative-minor"}, {"columns", set_to_json(w.subset)}, {"minor", rational_to_json(w.minor)}};
  }
  Json operator()(const CorrelationViolation& w) const {
    Json pairs = Json::array();
    for (const PairViolation& p : w.pairs) pairs.push_back(pair(p, ground));
    return {{"kind", "positive-correlation"}, {"pairs", pairs}};
  }
  Json operator()(const MinorViolation& w) const {
    Json original = Json::array();
    for (int e : w.original) original.push_back(e + 1);
    return {{"kind", "minor-correlation"},
            {"deleted", set_to_json(w.deleted)},
            {"contracted", set_to_json(w.contracted)},
            {"minor_elements", original},
            {"pair", pair(w.pair, GroundSet(static_cast<int>(w.original.size())))}};
  }
  Json operator()(const ExchangeViolation& w) const {
    Json out{{"kind", w.i < 0 ? "local-exchange" : "exchange"}, {"alpha", w.alpha}, {"beta", w.beta}};
    if (w.i >= 0) out["i"] = w.i + 1;
    return out;
  }
  Json operator()(const DegreeMismatch& w) const {
    return {{"kind", "degree-mismatch"}, {"alpha", w.alpha}, {"beta", w.beta}};
  }
  Json operator()(const CoefficientViolation& w) const {
    return {{"kind", "negative-coefficient"}, {"alpha", w.alpha}, {"coefficient", rational_to_json(w.coefficient)}};
  }
  Json operator()(const HessianViolation& w) const {
    return {{"kind", "hessian-signature"},
            {"alpha", w.alpha},
            {"positive", w.positive},
            {"zero", w.zero},
            {"negative", w.negative}};
  }
  Json operator()(const PointViolation& w) const {
    return {{"kind", "negative-difference"},
            {"point", vector_to_json(w.point)},
            {"i", w.i + 1},
            {"j", w.j + 1},
            {"alpha", w.alpha},
            {"value", rational_to_json(w.value)}};
  }
  Json operator()(const LineViolation& w) const {
    Json coeffs = Json::array();
    for (const Rational& c : w.restriction.coefficients()) coeffs.push_back(rational_to_json(c));
    return {{"kind", "non-real-root"},
            {"base", vector_to_json(w.base)},
            {"direction", vector_to_json(w.direction)},
            {"restriction", coeffs},
            {"distinct_real_roots", w.distinct_real_roots}};
  }
  Json operator()(const RelationViolation& w) const {
    Json quad = Json::array();
    for (int e : w.quad) quad.push_back(e + 1);
    Json products = Json::array();
    for (const auto& p : w.products) products.push_back(p ? rational_to_json(*p) : Json("inf"));
    return {{"kind", "three-term-relation"}, {"S", set_to_json(w.s)}, {"abcd", quad}, {"products", products}};
  }
  Json operator()(const IncidenceViolation& w) const {
    Json terms = Json::array();
    for (const IncidenceTerm& t : w.terms)
      terms.push_back({{"j", t.j + 1}, {"value", t.value ? rational_to_json(*t.value) : Json("inf")}});
    return {{"kind", "incidence-relation"},
            {"level", w.level + 1},
            {"S", set_to_json(w.s)},
            {"T", set_to_json(w.t)},
            {"terms", terms}};
  }
  Json operator()(const EnvelopeViolation& w) const {
    return {{"kind", "envelope-basis"}, {"basis", set_to_json(w.basis)}};
  }

  static Json pair(const PairViolation& p, const GroundSet& g) {
    return {{"i", g.label(p.i)},
            {"j", g.label(p.j)},
            {"pr_both", rational_to_json(p.stats.pr_both)},
            {"pr_neither", rational_to_json(p.stats.pr_neither)},
            {"pr_i_only", rational_to_json(p.stats.pr_i_only)},
            {"pr_j_only", rational_to_json(p.stats.pr_j_only)},
            {"gap", rational_to_json(p.gap)}};
  }
};

}  // namespace

LoadedFile load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  LoadedFile out{path, buffer.str(), {}};
  try {
    out.json = Json::parse(out.bytes);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path + ": " + e.what());
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_error("cannot write " + path);
  out << text;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  parse_error("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Mask set_from_json(const Json& j, const GroundSet& ground) {
  if (!j.is_array()) parse_error("a set must be an array, got " + j.dump());
  Mask s = 0;
  for (const Json& e : j) {
    int idx = -1;
    if (e.is_number_integer()) {
      const long long v = e.get<long long>();
      if (v < 1 || v > ground.n) throw Error(ErrorCode::BadElement, "element " + std::to_string(v) + " out of range");
      idx = static_cast<int>(v - 1);
    } else if (e.is_string()) {
      idx = ground.index_of(e.get<std::string>());
    } else {
      parse_error("set elements must be numbers or labels");
    }
    s |= bit(idx);
  }
  return s;
}

Json set_to_json(Mask s) {
  Json out = Json::array();
  for (int e : elements(s)) out.push_back(e + 1);
  return out;
}

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object()) parse_error("matroid must be a JSON object");
  if (j.contains("family")) {
    const std::string family = field(j, "family").get<std::string>();
    if (family == "uniform") return uniform(int_field(j, "k"), int_field(j, "n"));
    if (family == "named") return named(field(j, "name").get<std::string>());
    if (family == "transversal") {
      const int n = int_field(j, "n");
      if (n < 0 || n > kMaxGround) throw Error(ErrorCode::BadElement, "ground set size out of range");
      GroundSet ground(n, labels_from_json(j));
      SetSystem system{ground, {}};
      for (const Json& s : field(j, "sets")) system.sets.push_back(set_from_json(s, ground));
      std::optional<int> hint;
      if (j.contains("rank_hint")) hint = int_field(j, "rank_hint");
      return transversal_matroid(system, hint);
    }
    parse_error("unknown matroid family '" + family + "'");
  }
  const int n = int_field(j, "n");
  if (n < 0 || n > kMaxGround) throw Error(ErrorCode::BadElement, "ground set size out of range");
  GroundSet ground(n, labels_from_json(j));
  std::vector<Mask> bases;
  for (const Json& b : field(j, "bases")) bases.push_back(set_from_json(b, ground));
  int rank = 0;
  if (j.contains("rank")) rank = int_field(j, "rank");
  else if (!bases.empty()) rank = cardinality(bases.front());
  return Matroid(ground, rank, std::move(bases));
}

Json matroid_to_json(const Matroid& m) {
  Json out{{"n", m.size()}};
  if (!m.ground().labels.empty()) out["labels"] = m.ground().labels;
  out["rank"] = m.rank();
  Json bases = Json::array();
  for (Mask b : m.bases()) bases.push_back(set_to_json(b));
  out["bases"] = bases;
  return out;
}

namespace {

int vars_of(const Json& j) {
  const Json& vars = field(j, "vars");
  int n = 0;
  if (vars.is_number_integer()) n = vars.get<int>();
  else if (vars.is_array()) n = static_cast<int>(vars.size());
  else parse_error("'vars' must be a count or a list of names");
  if (n < 0) parse_error("'vars' must be nonnegative");
  return n;
}

Exponent exponent_of(const Json& term, int n) {
  Exponent alpha;
  for (const Json& a : field(term, "exp")) {
    if (!a.is_number_integer() || a.get<int>() < 0) parse_error("exponents must be nonnegative integers");
    alpha.push_back(a.get<int>());
  }
  if (static_cast<int>(alpha.size()) != n) parse_error("exponent length differs from 'vars'");
  return alpha;
}

}  // namespace

MultiPoly poly_from_json(const Json& j) {
  const int n = vars_of(j);
  MultiPoly f(n);
  for (const Json& t : field(j, "terms")) f.add_term(exponent_of(t, n), rational_from_json(field(t, "coeff")));
  return f;
}

bool has_puiseux_coefficients(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) return false;
  for (const Json& t : j["terms"])
    if (t.is_object() && t.contains("coeff") && t["coeff"].is_array()) return true;
  return false;
}

PuiseuxMultiPoly puiseux_poly_from_json(const Json& j) {
  PuiseuxMultiPoly f{vars_of(j), {}};
  for (const Json& t : field(j, "terms")) {
    const Json& c = field(t, "coeff");
    PuiseuxPoly coeff = c.is_array() ? puiseux_from_json(c) : PuiseuxPoly::constant(rational_from_json(c));
    Exponent alpha = exponent_of(t, f.nvars);
    auto [it, fresh] = f.terms.emplace(std::move(alpha), coeff);
    if (!fresh) it->second = it->second + coeff;
  }
  return f;
}

Json poly_to_json(const MultiPoly& f) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : f.terms()) terms.push_back({{"exp", alpha}, {"coeff", rational_to_json(c)}});
  return {{"vars", f.nvars()}, {"terms", terms}};
}

PuiseuxPoly puiseux_from_json(const Json& j) {
  if (!j.is_array()) parse_error("a Puiseux coefficient is a list of {\"ord\", \"coeff\"}");
  std::vector<PuiseuxPoly::Term> terms;
  for (const Json& t : j) terms.emplace_back(rational_from_json(field(t, "ord")), rational_from_json(field(t, "coeff")));
  return PuiseuxPoly(std::move(terms));
}

Json puiseux_to_json(const PuiseuxPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"ord", rational_to_json(e)}, {"coeff", rational_to_json(c)}});
  return out;
}

Json puiseux_poly_to_json(const PuiseuxMultiPoly& f) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : f.terms) terms.push_back({{"exp", alpha}, {"coeff", puiseux_to_json(c)}});
  return {{"vars", f.nvars}, {"terms", terms}};
}

Convention parse_convention(const std::string& text) {
  if (text == "min" || text == "MIN_PLUS" || text == "min-plus") return Convention::MinPlus;
  if (text == "max" || text == "MAX_PLUS" || text == "max-plus") return Convention::MaxPlus;
  parse_error("unknown convention '" + text + "' (expected min or max)");
}

WeightVector weights_from_json(const Json& j, const GroundSet* ground) {
  WeightVector w;
  w.convention = j.contains("convention") ? parse_convention(field(j, "convention").get<std::string>())
                                          : Convention::MinPlus;
  const Json& entries = field(j, "entries");
  GroundSet g;
  if (j.contains("n")) {
    w.n = int_field(j, "n");
    if (ground && ground->n != w.n) throw Error(ErrorCode::SupportMismatch, "weights and matroid have different n");
    g = ground ? *ground : GroundSet(w.n);
  } else if (ground) {
    g = *ground;
    w.n = ground->n;
  } else {
    int largest = 0;
    for (const Json& e : entries)
      for (const Json& x : field(e, "set")) {
        if (!x.is_number_integer()) parse_error("weights with labels need \"n\" and a matroid");
        largest = std::max(largest, x.get<int>());
      }
    w.n = largest;
    g = GroundSet(w.n);
  }
  if (w.n < 0 || w.n > kMaxGround) throw Error(ErrorCode::BadElement, "ground set size out of range");

  const std::string infinite = w.convention == Convention::MinPlus ? "inf" : "-inf";
  for (const Json& e : entries) {
    const Mask s = set_from_json(field(e, "set"), g);
    const Json& value = field(e, "value");
    if (value.is_string() && (value == "inf" || value == "-inf" || value == "+inf")) {
      const bool matches = value == infinite || (infinite == "inf" && value == "+inf");
      if (!matches) parse_error("infinite value " + value.get<std::string>() + " conflicts with the convention");
      continue;
    }
    if (!w.values.emplace(s, rational_from_json(value)).second) parse_error("duplicate weight entry");
  }
  return w;
}

Json weights_to_json(const WeightVector& w) {
  Json entries = Json::array();
  for (const auto& [s, v] : w.values) entries.push_back({{"set", set_to_json(s)}, {"value", rational_to_json(v)}});
  return {{"convention", convention_name(w.convention)}, {"n", w.n}, {"entries", entries}};
}

FlagChain chain_from_json(const Json& j) {
  FlagChain chain;
  for (const Json& c : field(j, "constituents")) {
    Matroid m = matroid_from_json(field(c, "matroid"));
    WeightVector w = c.contains("weights") ? weights_from_json(c.at("weights"), &m.ground()) : zero_weights(m);
    chain.constituents.push_back({std::move(m), std::move(w)});
  }
  return chain;
}

RationalMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_array() ? j : field(j, "entries");
  if (!rows.is_array() || rows.empty()) parse_error("matrix needs at least one row");
  std::vector<std::vector<Rational>> out;
  for (const Json& r : rows) {
    if (!r.is_array()) parse_error("matrix rows must be arrays");
    std::vector<Rational> row;
    for (const Json& x : r) row.push_back(rational_from_json(x));
    out.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(out);
}

Json matrix_to_json(const RationalMatrix& a) {
  Json rows = Json::array();
  for (int r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(rational_to_json(a(r, c)));
    rows.push_back(row);
  }
  return {{"entries", rows}};
}

RationalVector parse_vector(const std::string& text) {
  RationalVector out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) parse_error("empty vector");
  return out;
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(rational_to_json(x));
  return out;
}

Json verdict_to_json(const Verdict& v, const GroundSet& ground) {
  Json out{{"check", v.check}, {"status", status_name(v.status)}};
  if (!v.clause.empty()) out["clause"] = v.clause;
  if (!v.certificate.empty()) out["certificate"] = v.certificate;
  out["effort"] = v.effort;
  Json w = std::visit(WitnessJson{ground}, v.witness);
  if (!w.is_null()) out["witness"] = w;
  return out;
}

Json verdict_to_json(const Verdict& v) { return verdict_to_json(v, GroundSet(0)); }

}  // namespace poslab
