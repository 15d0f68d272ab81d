#pragma once

// JSON encodings. Output uses ordered_json so key order is fixed and the
// text is byte-deterministic; elements are written as canonical strings.
//
//   matrix          {"ring": "Z", "rows": m, "cols": n, "entries": [[...], ...]}
//                   or a bare array of rows; entries are numbers or strings
//   factorization   {"ring": ..., "W": ..., "u": matrix, "v": matrix}
//                   or {"W": ..., "v": element} for the elementary e_v
//   morphism        {"source": fac, "target": fac, "f00": matrix, "f11": matrix}
//                   or {"W": ..., "v1": ..., "v2": ..., "r": ...}
//   class           {"W": ..., "labels": [["p", i], ...]}
//   decomposition   {"p": ..., "n": n, "mult": {"1": c1, ...}}

#include <string_view>

#include <nlohmann/json.hpp>

#include "edmf/artinian.hpp"
#include "edmf/classify.hpp"
#include "edmf/hom.hpp"
#include "edmf/smith.hpp"

namespace edmf::io {

using Json = nlohmann::ordered_json;

// Throws ParseError on malformed text.
Json parse_json(std::string_view text);

// The "ring" key if present, otherwise `fallback`.
Ring ring_of(const Json& j, const Ring& fallback);

Element element_from_json(const Json& j, const Ring& ring);
Matrix matrix_from_json(const Json& j, const Ring& fallback);
MatrixFactorization factorization_from_json(const Json& j, const Ring& fallback);
MfMorphism morphism_from_json(const Json& j, const Ring& fallback);
MfClass class_from_json(const Json& j, const Ring& fallback);

Json to_json(const Element& e);
Json to_json(const Matrix& m);
Json to_json(const std::vector<Element>& elements);
Json to_json(const MatrixFactorization& a);
Json to_json(const MfMorphism& f);
Json to_json(const MfClass& c);
Json to_json(const SmithDecomposition& snf);
Json to_json(const ModuleInvariants& m);
Json to_json(const HomModules& h);
Json to_json(const CyclicDecomposition& d);
Json to_json(const ARQuiver& q);

// dump() with two-space indentation and a trailing newline.
std::string render(const Json& j);

}  // namespace edmf::io
