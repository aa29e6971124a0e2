#pragma once

#include <json.hpp>

#include "qsc/composition.hpp"
#include "qsc/insertion.hpp"
#include "qsc/qsym.hpp"
#include "qsc/rw_tree.hpp"
#include "qsc/tableau.hpp"

// Deterministic JSON forms of the library's values. Objects keep insertion
// order; coefficient maps are written in GrevlexLess order.
namespace qsc::json {

using Json = nlohmann::ordered_json;

Json to_json(const Composition& alpha);  // [a, b, c]
Json to_json(const Cell& c);             // [col, row]
Json to_json(const Entry& e);            // integer or "inf"
Json to_json(const Filling& f);          // {"shape": [...], "rows": [[...], ...]} rows bottom-up
Json to_json(const BasisExpansion& e);   // {"basis": ..., "degree": n, "coeffs": {"a,b": c}}
Json to_json(const MExpr& f);            // as a monomial BasisExpansion
Json to_json(const TraceStep& s);
Json to_json(const InsertionResult& r, int k);
Json to_json(const RaptureResult& r);
Json to_json(const RecordingPair& pq);
Json to_json(const RWTree& tree);
Json to_json(const ConjectureReport& rep);

// Readers throw std::invalid_argument on malformed input.
Composition composition_from_json(const Json& j);  // array or "a,b,c" string
Cell cell_from_json(const Json& j);
Filling filling_from_json(const Json& j);  // object form or bare array of rows
BasisExpansion expansion_from_json(const Json& j);

}  // namespace qsc::json
