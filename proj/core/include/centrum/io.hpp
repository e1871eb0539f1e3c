#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "centrum/fullcenter.hpp"

// JSON forms of the core objects. Scalars are strings "p/q"; matrices are
// arrays of rows. Every reader takes the prime of the working field (0 for
// the rationals) and converts entries into it.
namespace centrum::io {

using json = nlohmann::json;

json to_json(const Scalar& s);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const Algebra& a);
json to_json(const AlgebraMap& f);
json to_json(const Subalgebra& s);
json to_json(const Bimodule& m);
json to_json(const BimoduleMap& f);
json to_json(const Quotient& q);
json to_json(const Cospan& c);
json to_json(const TwoDiagram& d);
json to_json(const ValidationReport& r);
json to_json(const CoherenceReport& r, bool with_matrices);

Scalar scalar_from_json(const json& j, std::uint32_t prime);
Vector vector_from_json(const json& j, std::uint32_t prime);
Matrix matrix_from_json(const json& j, std::uint32_t prime);

// A name understood by named_algebra, or {"named": ...}, or
// {"dim", "unit", "structure_constants": [[i, j, k, c], ...], "label"?}.
Algebra algebra_from_json(const json& j, std::uint32_t prime);
// {"src", "tgt", "matrix"}, or {"unit": alg}, or {"diagonal": n}, or
// {"identity": alg}, or {"compose": [g, f]} meaning g after f.
AlgebraMap map_from_json(const json& j, std::uint32_t prime);
// {"left", "right", "dim", "lact", "ract"}, or {"regular": alg}, or
// {"restriction": map}, or {"column": n}, or {"row": n}.
Bimodule bimodule_from_json(const json& j, std::uint32_t prime);
// {"src", "tgt", "matrix"}, or {"identity": bimodule}.
BimoduleMap bimodule_map_from_json(const json& j, std::uint32_t prime);
// {"legA": map, "legB": map}, or {"identity": alg}.
Cospan cospan_from_json(const json& j, std::uint32_t prime);
// {"src": cospan, "tgt": cospan, "M": bimodule, "f", "g"}, or {"identity": cospan}.
TwoDiagram diagram_from_json(const json& j, std::uint32_t prime);

// The same algebra with its structure constants read in GF(prime).
Algebra to_field(const Algebra& a, std::uint32_t prime);

// "rational" -> 0, "gfp:<p>" -> p for a prime p.
std::uint32_t parse_field(const std::string& text);

}  // namespace centrum::io
