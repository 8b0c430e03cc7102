#pragma once

#include <json.hpp>
#include <string>

#include "poslab/matrix.hpp"
#include "poslab/matroid.hpp"
#include "poslab/multipoly.hpp"
#include "poslab/puiseux.hpp"
#include "poslab/tropical.hpp"
#include "poslab/verdict.hpp"

namespace poslab {

using Json = nlohmann::ordered_json;

// Malformed input raises Error(ErrorCode::Parse) unless a more specific matroid
// or polynomial error applies.

struct LoadedFile {
  std::string path;
  std::string bytes;
  Json json;
};

LoadedFile load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

// Elements given as 1-based numbers or labels.
Mask set_from_json(const Json& j, const GroundSet& ground);
Json set_to_json(Mask s);

// {"n", "labels"?, "rank"?, "bases"} or {"family": "uniform" | "transversal" | "named", ...}
Matroid matroid_from_json(const Json& j);
Json matroid_to_json(const Matroid& m);

// {"vars": count or names, "terms": [{"exp": [...], "coeff": "p/q"}]}
MultiPoly poly_from_json(const Json& j);
Json poly_to_json(const MultiPoly& f);

// [{"ord": "p/q", "coeff": "p/q"}, ...]
PuiseuxPoly puiseux_from_json(const Json& j);
Json puiseux_to_json(const PuiseuxPoly& p);
Json puiseux_poly_to_json(const PuiseuxMultiPoly& f);
PuiseuxMultiPoly puiseux_poly_from_json(const Json& j);
// True when some term's coefficient is a Puiseux list rather than a rational.
bool has_puiseux_coefficients(const Json& j);

// {"convention": "min" | "max", "n"?, "entries": [{"set", "value": "p/q" | "inf" | "-inf"}]}
// `ground` resolves labels and supplies n when the file omits it.
WeightVector weights_from_json(const Json& j, const GroundSet* ground = nullptr);
Json weights_to_json(const WeightVector& w);

// {"constituents": [{"matroid": {...}, "weights": {...}?}]}; missing weights are zero.
FlagChain chain_from_json(const Json& j);

// {"entries": [["1", "0"], ...]} or a bare array of rows.
RationalMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const RationalMatrix& a);

// "1,1/2,0"
RationalVector parse_vector(const std::string& text);
Json vector_to_json(const RationalVector& v);

Convention parse_convention(const std::string& text);

Json verdict_to_json(const Verdict& v, const GroundSet& ground);
Json verdict_to_json(const Verdict& v);

}  // namespace poslab
