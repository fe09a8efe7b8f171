#include <algorithm>

#include "doctest.h"
#include "ortholab/errors.hpp"
#include "ortholab/json_io.hpp"
#include "ortholab/search.hpp"

using namespace ortholab;

namespace {

Graph complete(int n) {
    Graph G(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) G.add_edge(i, j);
    }
    return G;
}

Graph cycle(int n) {
    Graph G(n);
    for (int i = 0; i < n; ++i) G.add_edge(i, (i + 1) % n);
    return G;
}

}  // namespace

TEST_CASE("maximum clique on reference graphs") {
    SearchReport k3 = max_clique(complete(3));
    CHECK(k3.size == 3);
    CHECK(k3.optimal);
    CHECK(k3.best_set == std::vector<int>{0, 1, 2});

    SearchReport empty10 = max_clique(Graph(10));
    CHECK(empty10.size == 1);
    CHECK(empty10.best_set == std::vector<int>{0});  // lex-least witness

    SearchReport c5 = max_clique(cycle(5));
    CHECK(c5.size == 2);
    CHECK(c5.best_set == std::vector<int>{0, 1});
}

TEST_CASE("maximum induced K_k-free subsets on reference graphs") {
    SearchReport k4 = max_induced_kfree(complete(4), 3);
    CHECK(k4.size == 2);  // any third vertex closes a triangle
    CHECK(k4.best_set == std::vector<int>{0, 1});

    SearchReport c5 = max_induced_kfree(cycle(5), 3);
    CHECK(c5.size == 5);  // C5 is triangle-free already

    CHECK_THROWS_AS(max_induced_kfree(complete(3), 2), OrthoError);
}

TEST_CASE("largest orthogonal sets match the closed forms") {
    SearchReport r = max_orthogonal_set(3, 4, Kind::one);
    CHECK(r.size == 8);
    CHECK(r.optimal);
    CHECK(r.formula_kind == "s22");
    CHECK(r.formula_value == 8);
    CHECK(r.matches_formula);
    // the witness really is an orthogonal set of that size (re-verified
    // internally; spot-check the vectors came back too)
    CHECK(r.best_vectors.size() == 8);

    SearchReport g = max_orthogonal_set(3, 4, Kind::gamma);
    CHECK(g.size == 4);
    CHECK(g.matches_formula);

    SearchReport b5 = max_orthogonal_set(2, 5, Kind::dot);
    CHECK(b5.size == 5);
    CHECK(b5.matches_formula);
}

TEST_CASE("binary dot-product cells where the stated closed form is off") {
    // true maxima: 7, 8, 15 at n = 6, 7, 8 (the stated table says 8, 9, 16)
    SearchReport n6 = max_orthogonal_set(2, 6, Kind::dot);
    CHECK(n6.optimal);
    CHECK(n6.size == 7);
    CHECK(n6.formula_value == 8);
    CHECK_FALSE(n6.matches_formula);
}

TEST_CASE("largest (3,2) sets: reference cells") {
    SearchReport a = max_kl_set(7, 2, Kind::one, 3);
    CHECK(a.size == 12);
    CHECK(a.optimal);
    CHECK(a.construction_size == 12);
    CHECK(a.matches_formula);

    SearchReport b = max_kl_set(7, 2, Kind::gamma, 3);
    CHECK(b.size == 4);
    CHECK(b.matches_formula);

    SearchReport h4 = max_kl_set(2, 4, Kind::hyperbolic, 3);
    CHECK(h4.size == 6);
    CHECK(h4.matches_formula);

    SearchReport d2 = max_kl_set(2, 2, Kind::dot, 3);
    CHECK(d2.size == 3);
    CHECK(d2.construction_size == 3);

    // the stated small-n closed form undershoots here: true value is 8
    SearchReport d4 = max_kl_set(2, 4, Kind::dot, 3);
    CHECK(d4.size == 8);
    CHECK(d4.optimal);
    CHECK(d4.construction_size == 7);
    CHECK_FALSE(d4.formula_in_range);
}

TEST_CASE("thread count changes nothing observable") {
    SearchReport r1 = max_orthogonal_set(3, 3, Kind::one, kDefaultNodeBudget,
                                         /*threads=*/1);
    SearchReport r2 = max_orthogonal_set(3, 3, Kind::one, kDefaultNodeBudget,
                                         /*threads=*/2);
    CHECK(r1.size == r2.size);
    CHECK(r1.nodes == r2.nodes);
    CHECK(r1.best_set == r2.best_set);
    CHECK(search_certificate(3, 3, Kind::one, 2, kDefaultNodeBudget, r1)
              .dump() ==
          search_certificate(3, 3, Kind::one, 2, kDefaultNodeBudget, r2)
              .dump());

    SearchReport k1 = max_kl_set(7, 2, Kind::one, 3, kDefaultNodeBudget, 1);
    SearchReport k2 = max_kl_set(7, 2, Kind::one, 3, kDefaultNodeBudget, 4);
    CHECK(k1.nodes == k2.nodes);
    CHECK(k1.best_set == k2.best_set);
}

TEST_CASE("node budgets are respected and reported") {
    SearchReport r = max_orthogonal_set(3, 4, Kind::one, /*budget=*/100, 1);
    CHECK(r.budget_hit);
    CHECK_FALSE(r.optimal);
    TableCell cell = run_cell(3, 4, Kind::one, 2, /*budget=*/100, 1);
    CHECK(cell.error == "BudgetExceeded");
    CHECK_FALSE(cell.sandwich_ok);
}

TEST_CASE("run_cell sandwich status on a healthy cell") {
    TableCell cell = run_cell(7, 2, Kind::one, 3, kDefaultNodeBudget, 0);
    CHECK(cell.error.empty());
    CHECK(cell.sandwich_ok);
    CHECK(cell.rep.size == 12);
}

TEST_CASE("construction lookup per cell") {
    CHECK(best_construction_size(7, 2, Kind::one, 3) == 12);
    CHECK(best_construction_size(7, 2, Kind::gamma, 3) == 4);
    CHECK(best_construction_size(2, 4, Kind::dot, 3) == 7);
    CHECK(best_construction_size(2, 2, Kind::dot, 3) == 3);
    CHECK(best_construction_size(2, 6, Kind::hyperbolic, 3) == 14);
    CHECK(best_construction_size(3, 4, Kind::one, 4) == 24);
    CHECK(best_construction_size(3, 4, Kind::gamma, 4) == -1);
    CHECK(best_construction_size(3, 3, Kind::one, 3) == 7);
}

TEST_CASE("vertex caps") {
    CHECK_THROWS_AS(max_orthogonal_set(3, 8, Kind::one), OrthoError);
    CHECK_THROWS_AS(max_kl_set(2, 11, Kind::dot, 3), OrthoError);
}
