#pragma once

#include "albert/fixpoint.hpp"
#include "albert/hexagon.hpp"
#include "albert/strmaps.hpp"
#include "json.hpp"

#include <string>

namespace albert::cli {

using json = nlohmann::ordered_json;

// Parses JSON text; ParseError on malformed input.
json parse_json(const std::string& text, const std::string& what);
json read_json_file(const std::string& path);

// Rationals are "p/q" strings; plain integers are accepted on input.
Rational rational_from_json(const json& j);
json to_json(const Rational& r);
Vec vec_from_json(const json& j, std::size_t size, const std::string& what);
json to_json(const Vec& v);

// Field elements: a rational (string) or an array of power-basis coefficients.
FieldElem field_elem_from_json(const FieldPtr& F, const json& j);
json to_json(const FieldElem& a);

// Associative elements: q_dim rational coordinates.
AssocElem assoc_from_json(const AssocPtr& A, const json& j);
// Albert elements: 27 coordinates, or {"coords": [...]}.
AlbertElem albert_from_json(const AlbertPtr& A, const json& j);
json to_json(const AlbertElem& x);

json to_json(const Generator& g);
json to_json(const InstrWord& w);
InstrWord word_from_json(const AlbertPtr& A, const json& j);

json to_json(const Subspace& s);
json to_json(const HexElem& g);
HexElem hex_from_json(const AlbertPtr& A, const json& j);

}  // namespace albert::cli
