#include <algorithm>
#include <set>

#include "doctest.h"
#include "ortholab/constructions.hpp"
#include "ortholab/errors.hpp"

using namespace ortholab;

namespace {

void check_advertised(const Construction& c) {
    CHECK(static_cast<long long>(c.S.size()) == c.advertised_size);
    CHECK(is_kl_orthogonal(c.S, c.k, c.l));
    if (!c.parts.empty() && c.parts_disjoint) {
        std::set<std::vector<Felt>> seen;
        std::size_t total = 0;
        for (const auto& part : c.parts) {
            total += part.size();
            for (const Vec& v : part) seen.insert(v);
        }
        CHECK(seen.size() == total);  // disjoint
        CHECK(total == c.S.size());
    }
}

}  // namespace

TEST_CASE("odd-dimension family") {
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
        for (Kind eps : {Kind::one, Kind::gamma}) {
            Construction c = example_odd_dim(q, 3, eps);
            CHECK(c.S.size() == 2 * q + 1);
            check_advertised(c);
        }
    }
    Construction big = example_odd_dim(3, 5, Kind::one);
    CHECK(big.S.size() == 2 * 9 + 1);
    check_advertised(big);
    CHECK_THROWS_AS(example_odd_dim(2, 3, Kind::dot), OrthoError);
    CHECK_THROWS_AS(example_odd_dim(3, 4, Kind::one), OrthoError);
}

TEST_CASE("even-dimension families") {
    Construction e1 = example_even_eps1(7, 2);
    CHECK(e1.S.size() == 2 * 7 - 2);
    check_advertised(e1);
    Construction e1b = example_even_eps1(3, 4);
    CHECK(e1b.S.size() == 2 * 9 - 2);
    check_advertised(e1b);

    Construction eg = example_even_epsgamma(7, 2);
    CHECK(eg.S.size() == 4);
    check_advertised(eg);
    Construction eg2 = example_even_epsgamma(3, 4);
    CHECK(eg2.S.size() == 2 * 3 + 4);
    check_advertised(eg2);
}

TEST_CASE("binary families") {
    Construction odd = example_binary_odd(7);
    CHECK(odd.S.size() == (1u << 4) + 1);  // 2^{(n+1)/2} + 1
    check_advertised(odd);

    Construction evn = example_binary_even_dot(6);
    CHECK(evn.S.size() == (1u << 4) - 3);  // 2^{n/2+1} - 3
    check_advertised(evn);

    Construction hyp = example_binary_hyperbolic(6);
    CHECK(hyp.S.size() == (1u << 4) - 2);  // 2^{n/2+1} - 2
    check_advertised(hyp);
    for (std::uint32_t n : {2u, 4u, 8u}) {
        check_advertised(example_binary_hyperbolic(n));
        check_advertised(example_binary_even_dot(n));
    }
}

TEST_CASE("four-per-quadruple example over n = 4") {
    Construction c = example_k4_n4(3);
    CHECK(c.k == 4);
    CHECK(c.l == 2);
    CHECK(c.S.size() == 24);
    CHECK(is_kl_orthogonal(c.S, 4, 2));
    Construction c5 = example_k4_n4(5);
    CHECK(c5.S.size() == 3 * (25 - 1));  // 3(q^2 - 1)
    CHECK(is_kl_orthogonal(c5.S, 4, 2));
}

TEST_CASE("seven vectors in dimension four over GF(2)") {
    Construction c = remark2_set();
    CHECK(c.S.size() == 7);
    CHECK(is_kl_orthogonal(c.S, 3, 2));
    // frozen non-orthogonality structure (0-indexed pairs)
    Graph G = nonorth_graph(c.S);
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < G.n; ++i) {
        for (int j = i + 1; j < G.n; ++j) {
            if (G.edge(i, j)) edges.insert({i, j});
        }
    }
    const std::set<std::pair<int, int>> expected = {
        {0, 1}, {1, 2}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {5, 6}};
    CHECK(edges == expected);
    const int degs[] = {1, 3, 3, 3, 1, 2, 3};
    for (int i = 0; i < 7; ++i) CHECK(G.degree(i) == degs[i]);
}

TEST_CASE("three vectors in dimension two over GF(2)") {
    Construction c = remark2_n2_set();
    CHECK(c.S.size() == 3);
    CHECK(is_kl_orthogonal(c.S, 3, 2));
    CHECK_FALSE(is_orthogonal_set(c.S));
}

TEST_CASE("name dispatch covers every generator") {
    for (const std::string& name : construction_names()) {
        std::uint32_t q = 3, n = 3;
        Kind eps = Kind::one;
        if (name.rfind("binary", 0) == 0 || name.rfind("remark2", 0) == 0) {
            q = 2;
            n = 4;
            eps = Kind::dot;
        }
        if (name == "binary-odd") n = 5;
        if (name == "remark2-n2") n = 2;
        if (name == "even-eps1") n = 2;
        if (name == "even-epsgamma") {
            n = 2;
            eps = Kind::gamma;
        }
        if (name == "k4-n4") n = 4;
        Construction c = construction_by_name(name, q, n, eps);
        CHECK(c.name == name);
        CHECK(c.S.size() >= 1);
    }
    CHECK_THROWS_AS(construction_by_name("nope", 3, 3, Kind::one),
                    OrthoError);
}
