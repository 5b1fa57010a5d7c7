#pragma once

#include "json.hpp"
#include "weylchar/characters.hpp"
#include "weylchar/laurent.hpp"
#include "weylchar/specialroots.hpp"
#include "weylchar/tensor.hpp"

namespace weylchar {

using Json = nlohmann::json;

/// {"nvars": r, "terms": [{"e": [...], "c": "decimal"}]} in descending graded-lex order.
Json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const Json& j);

/// {"tables": [[[coords]...]...], "tuples": [[one-based]...], "signatures": [...]}.
Json to_json(const GammaSystem& system);
GammaSystem gamma_system_from_json(const Json& j);

/// {"hw": [...], "dim": n, "mults": [{"w": [...], "m": k}], "poly": <laurent>}.
Json to_json(const CharacterResult& result);
CharacterResult character_from_json(const Json& j);

/// {"lhs": [[...], [...]], "rhs": [{"w": [...], "mult": m}], "dim_check": n}.
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// Integers go out as JSON numbers when they fit in 64 bits, otherwise as decimal strings.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

}  // namespace weylchar
