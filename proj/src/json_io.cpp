#include "ortholab/json_io.hpp"

namespace ortholab {

namespace {

// Uniform wrapper so malformed documents surface as ParseError (exit class:
// bad input), never as a raw nlohmann exception.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        fail("ParseError", std::string(what) + ": " + e.what());
    }
}

std::uint32_t get_u32(const ojson& j, const char* key) {
    return guarded(key, [&]() -> std::uint32_t {
        const auto& v = j.at(key);
        require(v.is_number_unsigned() || v.is_number_integer(), "ParseError",
                std::string(key) + " must be a non-negative integer");
        const long long x = v.get<long long>();
        require(x >= 0 && x <= 0xFFFFFFFFLL, "ParseError",
                std::string(key) + " out of range");
        return static_cast<std::uint32_t>(x);
    });
}

Vec get_vec(const ojson& j, std::size_t n, const Field& F) {
    require(j.is_array() && j.size() == n, "ParseError",
            "vector must be an array of length n");
    Vec v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const long long x = guarded("vector entry", [&]() {
            return j[i].get<long long>();
        });
        require(x >= 0 && static_cast<std::uint64_t>(x) < F.q, "ParseError",
                "vector entry out of field range");
        v[i] = static_cast<Felt>(x);
    }
    return v;
}

}  // namespace

ojson parse_json(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail("ParseError", std::string("invalid JSON: ") + e.what());
    }
}

ojson field_to_json(const Field& F) {
    ojson j;
    j["p"] = F.p;
    j["m"] = F.m;
    j["modulus"] = F.modulus;
    return j;
}

FieldPtr field_from_json(const ojson& j) {
    const std::uint32_t p = get_u32(j, "p");
    const std::uint32_t m = get_u32(j, "m");
    FieldPtr F = field_create(p, m);
    if (j.contains("modulus")) {
        const auto mod = guarded("modulus", [&]() {
            return j.at("modulus").get<std::vector<std::uint32_t>>();
        });
        require(mod == F->modulus, "ParseError",
                "modulus does not match the canonical modulus for GF(p^m)");
    }
    return F;
}

ojson form_to_json(const BilinearForm& B) {
    ojson j;
    j["field"] = field_to_json(*B.F);
    j["n"] = B.dim();
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < B.dim(); ++i) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < B.dim(); ++c) row.push_back(B.A.at(i, c));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j;
}

BilinearForm form_from_json(const ojson& j) {
    FieldPtr F = guarded("field", [&]() { return field_from_json(j.at("field")); });
    const std::uint32_t n = get_u32(j, "n");
    const ojson& rows = guarded("matrix", [&]() -> const ojson& {
        return j.at("matrix");
    });
    require(rows.is_array() && rows.size() == n, "ParseError",
            "matrix must have n rows");
    Mat A(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
        Vec row = get_vec(rows[i], n, *F);
        for (std::uint32_t c = 0; c < n; ++c) A.at(i, c) = row[c];
    }
    return make_form(std::move(F), std::move(A));
}

ojson set_to_json(const OrthoSet& S) {
    ojson j;
    j["v"] = 1;
    j["field"] = field_to_json(*S.B.F);
    j["n"] = S.dim();
    j["form"] = form_to_json(S.B)["matrix"];
    ojson vecs = ojson::array();
    for (const Vec& v : S.vectors) vecs.push_back(v);
    j["vectors"] = std::move(vecs);
    return j;
}

OrthoSet set_from_json(const ojson& j) {
    FieldPtr F = guarded("field", [&]() { return field_from_json(j.at("field")); });
    const std::uint32_t n = get_u32(j, "n");
    ojson form_doc;
    form_doc["field"] = field_to_json(*F);
    form_doc["n"] = n;
    form_doc["matrix"] = guarded("form", [&]() { return j.at("form"); });
    BilinearForm B = form_from_json(form_doc);
    const ojson& vecs = guarded("vectors", [&]() -> const ojson& {
        return j.at("vectors");
    });
    require(vecs.is_array(), "ParseError", "vectors must be an array");
    std::vector<Vec> vectors;
    vectors.reserve(vecs.size());
    for (const auto& jv : vecs) vectors.push_back(get_vec(jv, n, *F));
    return make_set(std::move(B), std::move(vectors));
}

ojson verification_to_json(int k, int l, const KlReport& r) {
    ojson j;
    j["v"] = 1;
    j["property"] = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
    j["holds"] = r.holds;
    if (r.witness.empty()) {
        j["witness"] = nullptr;
    } else {
        j["witness"] = r.witness;
    }
    return j;
}

ojson graph_to_json(const Graph& G) {
    ojson j;
    j["n"] = G.n;
    ojson edges = ojson::array();
    for (const auto& [a, b] : G.edges()) {
        edges.push_back(ojson::array({a, b}));
    }
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const ojson& j) {
    const std::uint32_t n = get_u32(j, "n");
    require(n <= static_cast<std::uint32_t>(kMaxGraphVertices), "TooLarge",
            "graph exceeds the vertex cap");
    Graph G(static_cast<int>(n));
    const ojson& edges = guarded("edges", [&]() -> const ojson& {
        return j.at("edges");
    });
    require(edges.is_array(), "ParseError", "edges must be an array");
    for (const auto& e : edges) {
        require(e.is_array() && e.size() == 2, "ParseError",
                "each edge must be a pair");
        const long long a = guarded("edge", [&]() { return e[0].get<long long>(); });
        const long long b = guarded("edge", [&]() { return e[1].get<long long>(); });
        require(a >= 0 && b >= 0 && a < G.n && b < G.n && a != b, "ParseError",
                "edge endpoints out of range");
        G.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
    return G;
}

ojson construction_to_json(const Construction& c) {
    ojson j = set_to_json(c.S);
    j["type"] = "construction";
    j["name"] = c.name;
    j["k"] = c.k;
    j["l"] = c.l;
    j["size"] = c.S.size();
    j["advertised_size"] = c.advertised_size;
    return j;
}

ojson search_certificate(std::uint32_t q, std::uint32_t n, Kind cls, int k,
                         unsigned long long budget, const SearchReport& rep) {
    ojson j;
    j["v"] = 1;
    j["type"] = "search";
    j["q"] = q;
    j["n"] = n;
    j["class"] = kind_label(cls);
    j["k"] = k;
    j["l"] = 2;
    // the ambient field and canonical Gram matrix, so the certificate
    // re-verifies from this document alone
    FieldPtr F = field_from_order(q);
    BilinearForm B = canonical_form(F, n, cls);
    j["field"] = field_to_json(*F);
    j["form"] = form_to_json(B)["matrix"];
    j["budget_nodes"] = budget;
    j["size"] = rep.size;
    j["optimal"] = rep.optimal;
    j["best_set"] = rep.best_set;
    ojson vecs = ojson::array();
    for (const Vec& v : rep.best_vectors) vecs.push_back(v);
    j["vectors"] = std::move(vecs);
    if (rep.formula_kind.empty()) {
        j["formula"] = nullptr;
    } else {
        ojson f;
        f["kind"] = rep.formula_kind;
        f["value"] = rep.formula_value;
        f["in_range"] = rep.formula_in_range;
        f["exact"] = rep.formula_exact;
        f["matches"] = rep.matches_formula;
        j["formula"] = std::move(f);
    }
    j["construction_size"] = rep.construction_size;
    return j;
}

}  // namespace ortholab
