#pragma once

#include <string>

#include "json.hpp"
#include "ortholab/constructions.hpp"
#include "ortholab/graphs.hpp"
#include "ortholab/orthosets.hpp"
#include "ortholab/search.hpp"

namespace ortholab {

// All emitted documents are schema version 1 ("v": 1) and use ordered JSON so
// the serialized bytes are stable.  Certificates never carry volatile run
// statistics (node counts, wall-clock time, thread counts); those belong to
// the human-facing stdout reports only.
using ojson = nlohmann::ordered_json;

ojson field_to_json(const Field& F);      // {"p", "m", "modulus"}
FieldPtr field_from_json(const ojson& j);  // rebuilds and cross-checks modulus

ojson form_to_json(const BilinearForm& B);  // {"field", "n", "matrix"}
BilinearForm form_from_json(const ojson& j);

// {"v", "field", "n", "form", "vectors"} - self-contained.
ojson set_to_json(const OrthoSet& S);
OrthoSet set_from_json(const ojson& j);

// {"v", "property": "(k,l)", "holds", "witness": null | [indices]}
ojson verification_to_json(int k, int l, const KlReport& r);

ojson graph_to_json(const Graph& G);  // {"n", "edges": [[i,j],...]}
Graph graph_from_json(const ojson& j);

// Self-contained construction certificate (verifiable from the file alone).
ojson construction_to_json(const Construction& c);

// Deterministic search certificate: parameters, the field/form, the witness
// vectors and the formula comparison; byte-identical across thread counts.
ojson search_certificate(std::uint32_t q, std::uint32_t n, Kind cls, int k,
                         unsigned long long budget, const SearchReport& rep);

// Parse text as JSON; throws OrthoError("ParseError") on malformed input.
ojson parse_json(const std::string& text);

}  // namespace ortholab
