#include <algorithm>

#include "doctest.h"
#include "ortholab/errors.hpp"
#include "ortholab/graphs.hpp"

using namespace ortholab;

namespace {

Graph cycle(int n) {
    Graph G(n);
    for (int i = 0; i < n; ++i) G.add_edge(i, (i + 1) % n);
    return G;
}

Graph complete(int n) {
    Graph G(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) G.add_edge(i, j);
    }
    return G;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph G(4);
    G.add_edge(0, 1);
    G.add_edge(1, 2);
    CHECK(G.edge(0, 1));
    CHECK(G.edge(1, 0));
    CHECK_FALSE(G.edge(0, 2));
    CHECK(G.degree(1) == 2);
    CHECK(G.edge_count() == 2);
    G.remove_edge(0, 1);
    CHECK_FALSE(G.edge(0, 1));
    CHECK(G.edge_count() == 1);
    Graph C = G.complement();
    CHECK(C.edge(0, 1));
    CHECK_FALSE(C.edge(1, 2));
    CHECK_FALSE(C.edge(0, 0));
    CHECK(C.edge_count() == 4 * 3 / 2 - 1);
}

TEST_CASE("triangle-free, cliques, independence") {
    CHECK(is_triangle_free(cycle(5)));
    CHECK_FALSE(is_triangle_free(complete(3)));
    CHECK(has_clique(complete(4), 4));
    CHECK_FALSE(has_clique(cycle(5), 3));
    CHECK(independence_number(cycle(5)) == 2);
    CHECK(independence_number(complete(6)) == 1);
    Graph empty(6);
    CHECK(independence_number(empty) == 6);
    // lex-least clique
    Graph G = complete(4);
    const std::vector<int> c = find_clique(G, 3);
    CHECK(c == std::vector<int>{0, 1, 2});
}

TEST_CASE("five-vertex exhaustion") { CHECK(verify_c5_lemma()); }

TEST_CASE("ramsey facts") {
    RamseyFacts rf = ramsey_facts();
    CHECK(rf.r33_lower_ok);
    CHECK(rf.r33_upper_ok);
    CHECK(rf.r34_ok);
    CHECK(rf.r34_witness.n == 8);
    CHECK(is_triangle_free(rf.r34_witness));
    CHECK(independence_number(rf.r34_witness) <= 3);
    CHECK(rf.binom_34 == 10);
    CHECK(ramsey_binomial(3, 3) == 6);
    CHECK(ramsey_binomial(3, 4) == 10);
}

TEST_CASE("turan bound as an exact rational") {
    // (1 - 1/r) n^2 / 2
    const auto [num2, den2] = turan_bound(2, 4);
    CHECK(num2 == 4 * den2);
    const auto [num1, den1] = turan_bound(1, 10);
    CHECK(num1 == 0);
    CHECK(den1 >= 1);
    const auto [num3, den3] = turan_bound(3, 10);
    // 2/3 * 100 / 2 = 100/3
    CHECK(3 * num3 == 100 * den3);
}
