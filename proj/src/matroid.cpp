#include "poslab/matroid.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace poslab {

namespace {

bool sorted_contains(const std::vector<Mask>& sorted, Mask s) {
  return std::binary_search(sorted.begin(), sorted.end(), s, LexLess{});
}

// Maximum matching of the elements in `elems` into distinct sets (Kuhn's algorithm).
int matching_size(Mask elems, const std::vector<Mask>& sets) {
  const std::vector<int> items = elements(elems);
  std::vector<int> owner(sets.size(), -1);  // set -> element

  auto augment = [&](auto&& self, int e, std::vector<char>& visited) -> bool {
    for (std::size_t s = 0; s < sets.size(); ++s) {
      if (!contains(sets[s], e) || visited[s]) continue;
      visited[s] = 1;
      if (owner[s] < 0 || self(self, owner[s], visited)) {
        owner[s] = e;
        return true;
      }
    }
    return false;
  };

  int matched = 0;
  for (int e : items) {
    std::vector<char> visited(sets.size(), 0);
    if (augment(augment, e, visited)) ++matched;
  }
  return matched;
}

Rational ratio(std::size_t count, std::size_t total) {
  Rational q(static_cast<unsigned long>(count), static_cast<unsigned long>(total));
  q.canonicalize();
  return q;
}

}  // namespace

GroundSet::GroundSet(int size, std::vector<std::string> names) : n(size), labels(std::move(names)) {
  if (n < 0 || n > kMaxGround) throw Error(ErrorCode::BadParams, "ground set size must be in 0..64");
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n)
      throw Error(ErrorCode::BadParams, "label count differs from ground set size");
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (static_cast<int>(distinct.size()) != n) throw Error(ErrorCode::BadParams, "labels must be distinct");
  }
}

std::string GroundSet::label(int e) const {
  if (!labels.empty()) return labels[static_cast<std::size_t>(e)];
  return std::to_string(e + 1);
}

std::string GroundSet::format(Mask s) const {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ",";
    out += label(e);
    first = false;
  }
  return out + "}";
}

int GroundSet::index_of(std::string_view name) const {
  for (std::size_t e = 0; e < labels.size(); ++e)
    if (labels[e] == name) return static_cast<int>(e);
  int value = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
  if (ec != std::errc() || ptr != name.data() + name.size() || value < 1 || value > n)
    throw Error(ErrorCode::BadElement, "unknown element '" + std::string(name) + "'");
  return value - 1;
}

Matroid::Matroid(GroundSet ground, int rank, std::vector<Mask> bases, Validation validation)
    : ground_(std::move(ground)), rank_(rank), bases_(std::move(bases)) {
  if (bases_.empty()) throw Error(ErrorCode::EmptyBases, "a matroid needs at least one basis");
  if (rank_ < 0 || rank_ > ground_.n) throw Error(ErrorCode::BadRank, "rank out of range");
  const Mask universe = full_mask(ground_.n);
  for (Mask b : bases_) {
    if ((b & ~universe) != 0)
      throw Error(ErrorCode::BadElement, "basis " + format_set(b) + " leaves the ground set");
    if (cardinality(b) != rank_)
      throw MixedCardinalityError(b, "basis " + ground_.format(b) + " has size " + std::to_string(cardinality(b)) +
                                         ", expected " + std::to_string(rank_));
  }
  std::sort(bases_.begin(), bases_.end(), LexLess{});
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());

  if (validation == Validation::Full) {
    if (auto v = find_exchange_violation(bases_))
      throw ExchangeFailureError(v->first, v->second, v->removed,
                                 "basis exchange fails for I=" + ground_.format(v->first) + ", J=" +
                                     ground_.format(v->second) + ", a=" + ground_.label(v->removed));
  }
  intersection_ = universe;
  for (Mask b : bases_) {
    union_ |= b;
    intersection_ &= b;
  }
}

bool Matroid::is_basis(Mask s) const { return sorted_contains(bases_, s); }

bool Matroid::is_independent(Mask s) const {
  return std::any_of(bases_.begin(), bases_.end(), [s](Mask b) { return (b & s) == s; });
}

bool Matroid::is_loop(int e) const { return !contains(union_, e); }
bool Matroid::is_coloop(int e) const { return contains(intersection_, e); }

std::optional<BasisExchangeViolation> find_exchange_violation(std::span<const Mask> bases) {
  std::vector<Mask> sorted(bases.begin(), bases.end());
  std::sort(sorted.begin(), sorted.end(), LexLess{});
  for (Mask first : sorted)
    for (Mask second : sorted) {
      const Mask only_first = first & ~second;
      const Mask only_second = second & ~first;
      for (int a : elements(only_first)) {
        bool found = false;
        for (int b : elements(only_second))
          if (sorted_contains(sorted, (first & ~bit(a)) | bit(b))) {
            found = true;
            break;
          }
        if (!found) return BasisExchangeViolation{first, second, a};
      }
    }
  return std::nullopt;
}

Matroid matroid_from_bases(const GroundSet& ground, int rank, std::vector<Mask> bases, Validation validation) {
  return Matroid(ground, rank, std::move(bases), validation);
}

Matroid uniform(int k, int n) {
  if (n < 0 || n > kMaxGround) throw Error(ErrorCode::BadParams, "uniform matroid needs 0 <= n <= 64");
  if (k < 0 || k > n) throw Error(ErrorCode::BadRank, "uniform matroid needs 0 <= k <= n");
  return Matroid(GroundSet(n), k, k_subsets(n, k), Validation::Trusted);
}

Matroid transversal_matroid(const SetSystem& system, std::optional<int> rank_hint) {
  if (system.sets.empty()) throw Error(ErrorCode::EmptyInput, "a set system needs at least one set");
  const int n = system.ground.n;
  for (Mask s : system.sets) {
    if (s == 0) throw Error(ErrorCode::EmptyInput, "sets of a set system must be nonempty");
    if ((s & ~full_mask(n)) != 0) throw Error(ErrorCode::BadElement, "set leaves the ground set");
  }
  const int r = matching_size(full_mask(n), system.sets);
  if (rank_hint && *rank_hint != r)
    throw Error(ErrorCode::NoTransversal, "no transversal of size " + std::to_string(*rank_hint) +
                                              "; maximum partial transversal has size " + std::to_string(r));
  std::vector<Mask> bases;
  for (Mask b : k_subsets(n, r))
    if (matching_size(b, system.sets) == r) bases.push_back(b);
  return Matroid(system.ground, r, std::move(bases));
}

Minor minor(const Matroid& m, Mask deleted, Mask contracted) {
  const Mask universe = full_mask(m.size());
  if (((deleted | contracted) & ~universe) != 0) throw Error(ErrorCode::BadElement, "minor sets leave the ground set");
  if ((deleted & contracted) != 0) throw Error(ErrorCode::OverlapError, "deleted and contracted sets overlap");
  if (!m.is_independent(contracted))
    throw Error(ErrorCode::DependentContraction, "contracted set " + m.ground().format(contracted) + " is dependent");

  // Bases of M/C are B - C for bases B containing C; deleting D keeps those
  // meeting D least (rank drops only when D holds coloops of M/C).
  int best = kMaxGround + 1;
  for (Mask b : m.bases())
    if ((b & contracted) == contracted) best = std::min(best, cardinality(b & deleted));

  const Mask kept = universe & ~deleted & ~contracted;
  std::vector<int> original = elements(kept);
  std::vector<int> relabel(static_cast<std::size_t>(m.size()), -1);
  for (std::size_t i = 0; i < original.size(); ++i) relabel[static_cast<std::size_t>(original[i])] = static_cast<int>(i);

  std::vector<Mask> bases;
  for (Mask b : m.bases()) {
    if ((b & contracted) != contracted || cardinality(b & deleted) != best) continue;
    Mask mapped = 0;
    for (int e : elements(b & kept)) mapped |= bit(relabel[static_cast<std::size_t>(e)]);
    bases.push_back(mapped);
  }
  if (bases.empty()) throw Error(ErrorCode::EmptyResult, "no basis survives the minor");

  std::vector<std::string> labels;
  if (!m.ground().labels.empty())
    for (int e : original) labels.push_back(m.ground().label(e));
  const int rank = m.rank() - cardinality(contracted) - best;
  return Minor{Matroid(GroundSet(static_cast<int>(original.size()), std::move(labels)), rank, std::move(bases),
                       Validation::Trusted),
               std::move(original)};
}

Matroid dual(const Matroid& m) {
  const Mask universe = full_mask(m.size());
  std::vector<Mask> bases;
  bases.reserve(m.basis_count());
  for (Mask b : m.bases()) bases.push_back(universe & ~b);
  return Matroid(m.ground(), m.size() - m.rank(), std::move(bases), Validation::Trusted);
}

Matroid named(std::string_view name) {
  if (name == "fano") {
    const std::vector<std::vector<int>> lines = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                                 {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    std::set<Mask> dependent;
    for (const auto& line : lines) {
      Mask s = 0;
      for (int e : line) s |= bit(e - 1);
      dependent.insert(s);
    }
    std::vector<Mask> bases;
    for (Mask s : k_subsets(7, 3))
      if (!dependent.count(s)) bases.push_back(s);
    return Matroid(GroundSet(7), 3, std::move(bases));
  }
  if (name == "vamos") {
    // Pairs {1,2},{3,4},{5,6},{7,8}; every union of two pairs except {5,6,7,8}
    // is a circuit-hyperplane.
    const std::set<Mask> dependent = {0b00001111, 0b00110011, 0b11000011, 0b00111100, 0b11001100};
    std::vector<Mask> bases;
    for (Mask s : k_subsets(8, 4))
      if (!dependent.count(s)) bases.push_back(s);
    return Matroid(GroundSet(8), 4, std::move(bases));
  }
  if (name == "choe-wagner-L") {
    std::vector<std::string> labels;
    for (int i = 1; i <= 10; ++i) labels.push_back(std::to_string(i));
    labels.push_back("e");
    labels.push_back("f");
    const GroundSet ground(12, labels);
    auto set = [&](std::initializer_list<const char*> names) {
      Mask s = 0;
      for (const char* nm : names) s |= bit(ground.index_of(nm));
      return s;
    };
    SetSystem system{ground,
                     {set({"1", "2", "3", "4", "f"}), set({"5", "6", "7", "f"}), set({"8", "9", "10", "f"}),
                      set({"1", "2", "3", "5", "6", "8", "9", "e", "f"})}};
    return transversal_matroid(system);
  }
  if (name.starts_with("uniform-")) {
    const std::string_view rest = name.substr(8);
    const auto dash = rest.find('-');
    int k = -1, n = -1;
    if (dash != std::string_view::npos) {
      auto r1 = std::from_chars(rest.data(), rest.data() + dash, k);
      auto r2 = std::from_chars(rest.data() + dash + 1, rest.data() + rest.size(), n);
      if (r1.ec != std::errc() || r1.ptr != rest.data() + dash || r2.ec != std::errc() ||
          r2.ptr != rest.data() + rest.size())
        k = n = -1;
    }
    if (k < 0 || n < 0) throw Error(ErrorCode::UnknownName, "malformed uniform name '" + std::string(name) + "'");
    return uniform(k, n);
  }
  throw Error(ErrorCode::UnknownName, "unknown matroid '" + std::string(name) + "'");
}

std::vector<std::string> named_matroids() { return {"fano", "vamos", "choe-wagner-L", "uniform-K-N"}; }

PairStats pair_stats(const Matroid& m, int i, int j) {
  if (i < 0 || j < 0 || i >= m.size() || j >= m.size()) throw Error(ErrorCode::BadElement, "element out of range");
  if (i == j) throw Error(ErrorCode::SameElement, "pair statistics need distinct elements");
  std::size_t both = 0, i_only = 0, j_only = 0;
  for (Mask b : m.bases()) {
    const bool has_i = contains(b, i), has_j = contains(b, j);
    if (has_i && has_j) ++both;
    else if (has_i) ++i_only;
    else if (has_j) ++j_only;
  }
  const std::size_t total = m.basis_count();
  PairStats s;
  s.pr_both = ratio(both, total);
  s.pr_i_only = ratio(i_only, total);
  s.pr_j_only = ratio(j_only, total);
  s.pr_neither = ratio(total - both - i_only - j_only, total);
  s.pr_i = s.pr_both + s.pr_i_only;
  s.pr_j = s.pr_both + s.pr_j_only;
  return s;
}

Verdict is_negatively_correlated(const Matroid& m) {
  CorrelationViolation violation;
  std::uint64_t examined = 0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) {
      ++examined;
      PairStats s = pair_stats(m, i, j);
      Rational gap = s.pr_both - s.pr_i * s.pr_j;
      if (gap > 0) violation.pairs.push_back(PairViolation{i, j, std::move(s), std::move(gap)});
    }
  if (!violation.pairs.empty())
    return Verdict::fail("negatively-correlated", "positive-correlation", std::move(violation), examined);
  return Verdict::certified("negatively-correlated", "exhaustive-pairs", examined);
}

Verdict is_balanced(const Matroid& m) {
  std::uint64_t examined = 1;
  Verdict self = is_negatively_correlated(m);
  if (!self.ok()) {
    const auto& pairs = std::get<CorrelationViolation>(self.witness).pairs;
    std::vector<int> identity(static_cast<std::size_t>(m.size()));
    for (int e = 0; e < m.size(); ++e) identity[static_cast<std::size_t>(e)] = e;
    return Verdict::fail("balanced", "minor-positive-correlation", MinorViolation{0, 0, identity, pairs.front()},
                         examined);
  }

  // Every (deleted, contracted) assignment, enumerated as base-3 digits per element.
  const int n = m.size();
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  while (true) {
    int pos = 0;
    while (pos < n && digit[static_cast<std::size_t>(pos)] == 2) digit[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
    ++digit[static_cast<std::size_t>(pos)];

    Mask deleted = 0, contracted = 0;
    for (int e = 0; e < n; ++e) {
      if (digit[static_cast<std::size_t>(e)] == 1) deleted |= bit(e);
      if (digit[static_cast<std::size_t>(e)] == 2) contracted |= bit(e);
    }
    if (n - cardinality(deleted | contracted) < 2) continue;
    if (!m.is_independent(contracted)) continue;
    ++examined;
    Minor sub = minor(m, deleted, contracted);
    Verdict v = is_negatively_correlated(sub.matroid);
    if (!v.ok()) {
      const auto& pairs = std::get<CorrelationViolation>(v.witness).pairs;
      return Verdict::fail("balanced", "minor-positive-correlation",
                           MinorViolation{deleted, contracted, std::move(sub.original), pairs.front()}, examined);
    }
  }
  return Verdict::certified("balanced", "exhaustive-minors", examined);
}

MultiPoly basis_generating_polynomial(const Matroid& m) {
  MultiPoly f(m.size());
  for (Mask b : m.bases()) f.add_term(indicator(b, m.size()), 1);
  return f;
}

Exponent indicator(Mask s, int n) {
  Exponent alpha(static_cast<std::size_t>(n), 0);
  for (int e : elements(s)) alpha[static_cast<std::size_t>(e)] = 1;
  return alpha;
}

Mask mask_of_exponent(const Exponent& alpha) {
  Mask s = 0;
  for (std::size_t v = 0; v < alpha.size(); ++v)
    if (alpha[v] != 0) s |= bit(static_cast<int>(v));
  return s;
}

}  // namespace poslab
