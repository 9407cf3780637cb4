#pragma once

// JSON documents for braids, tangles and closure fixtures. Complex matrices
// are nested arrays whose entries are numbers or [re, im] pairs.

#include <string>

#include <nlohmann/json.hpp>

#include "tanglesig/braidtangle.hpp"
#include "tanglesig/signatures.hpp"

namespace tanglesig::io {

using nlohmann::json;

/// Throws ParseError on unreadable files or invalid JSON.
json load_json(const std::string& path);

CMatrix parse_matrix(const json& j);
json matrix_to_json(const CMatrix& m);

ColouredObject parse_object(const json& j);
ColouredBraid parse_braid(const json& j);
/// Accepts tangle documents ("slices") and braid documents ("word").
TangleWord parse_tangle(const json& j);
json tangle_to_json(const TangleWord& t);

SeifertData parse_seifert(const json& j);
CComplexData parse_ccomplex(const json& j);
/// Seifert ("A") or C-complex ("matrices") fixture.
ClosureData parse_closure(const json& j);

bool is_braid_document(const json& j);

}  // namespace tanglesig::io
