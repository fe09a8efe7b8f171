#include <string>

#include "doctest.h"
#include "ortholab/constructions.hpp"
#include "ortholab/errors.hpp"
#include "ortholab/json_io.hpp"
#include "ortholab/search.hpp"

using namespace ortholab;

TEST_CASE("field round trip") {
    for (std::uint32_t q : {2u, 3u, 9u, 25u}) {
        FieldPtr F = field_from_order(q);
        ojson j = field_to_json(*F);
        FieldPtr G = field_from_json(j);
        CHECK(G->p == F->p);
        CHECK(G->m == F->m);
        CHECK(G->modulus == F->modulus);
    }
    // tampered modulus is rejected
    ojson j = field_to_json(*field_from_order(9));
    j["modulus"] = std::vector<std::uint32_t>{1, 1, 1};
    CHECK_THROWS_AS(field_from_json(j), OrthoError);
}

TEST_CASE("form round trip") {
    FieldPtr F = field_from_order(5);
    BilinearForm B = canonical_form(F, 3, Kind::one);
    ojson j = form_to_json(B);
    CHECK(j["n"] == 3);
    BilinearForm C = form_from_json(j);
    CHECK(C.A == B.A);
    CHECK(C.F->q == 5);
    // out-of-range entries are rejected
    j["matrix"][0][0] = 7;
    CHECK_THROWS_AS(form_from_json(j), OrthoError);
}

TEST_CASE("set round trip and schema header") {
    Construction c = remark2_set();
    ojson j = set_to_json(c.S);
    CHECK(j["v"] == 1);
    OrthoSet S = set_from_json(j);
    CHECK(S.vectors == c.S.vectors);
    CHECK(S.B.A == c.S.B.A);
    // construction documents parse as sets too (superset schema)
    ojson cj = construction_to_json(c);
    CHECK(cj["type"] == "construction");
    CHECK(cj["name"] == "remark2");
    CHECK(cj["k"] == 3);
    CHECK(cj["l"] == 2);
    OrthoSet S2 = set_from_json(cj);
    CHECK(S2.vectors == c.S.vectors);
}

TEST_CASE("verification document shape") {
    KlReport ok;
    ok.holds = true;
    ojson j = verification_to_json(3, 2, ok);
    CHECK(j["property"] == "(3,2)");
    CHECK(j["holds"] == true);
    CHECK(j["witness"].is_null());
    KlReport bad;
    bad.holds = false;
    bad.witness = {0, 2};
    ojson jb = verification_to_json(2, 2, bad);
    CHECK(jb["witness"] == ojson::array({0, 2}));
}

TEST_CASE("graph round trip") {
    Graph G(4);
    G.add_edge(0, 1);
    G.add_edge(2, 3);
    ojson j = graph_to_json(G);
    Graph H = graph_from_json(j);
    CHECK(H.n == 4);
    CHECK(H.edge(0, 1));
    CHECK(H.edge(2, 3));
    CHECK_FALSE(H.edge(0, 2));
    CHECK(H.edge_count() == 2);
}

TEST_CASE("search certificates are byte-stable and carry no volatile stats") {
    SearchReport rep = max_orthogonal_set(3, 2, Kind::one);
    ojson a = search_certificate(3, 2, Kind::one, 2, kDefaultNodeBudget, rep);
    ojson b = search_certificate(3, 2, Kind::one, 2, kDefaultNodeBudget, rep);
    CHECK(a.dump() == b.dump());
    CHECK_FALSE(a.contains("nodes"));
    CHECK_FALSE(a.contains("elapsed_seconds"));
    CHECK_FALSE(a.contains("threads"));
    CHECK(a["v"] == 1);
    CHECK(a["type"] == "search");
    CHECK(a["size"] == rep.size);
    // the embedded witness re-verifies from the document alone: a search
    // certificate carries field/n/form/vectors, i.e. parses as a set
    OrthoSet S = set_from_json(a);
    CHECK(is_orthogonal_set(S));
    CHECK(S.size() == rep.size);
}

TEST_CASE("malformed input maps to ParseError") {
    CHECK_THROWS_AS(parse_json("{not json"), OrthoError);
    try {
        parse_json("]");
        CHECK(false);
    } catch (const OrthoError& e) {
        CHECK(std::string(e.code()) == "ParseError");
    }
    // structurally valid JSON, wrong schema
    try {
        set_from_json(parse_json("{\"v\": 1}"));
        CHECK(false);
    } catch (const OrthoError& e) {
        CHECK(std::string(e.code()) == "ParseError");
    }
}
