#include <string>

#include "doctest.h"
#include "ortholab/errors.hpp"
#include "ortholab/orthosets.hpp"

using namespace ortholab;

namespace {

std::string code_of(const OrthoError& e) { return e.code(); }

OrthoSet basis_set(std::uint32_t q, std::uint32_t n, Kind cls) {
    FieldPtr F = field_from_order(q);
    BilinearForm B = canonical_form(F, n, cls);
    std::vector<Vec> vs;
    for (std::uint32_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        vs.push_back(std::move(e));
    }
    return make_set(std::move(B), std::move(vs));
}

}  // namespace

TEST_CASE("make_set validation") {
    FieldPtr F = field_from_order(3);
    BilinearForm B = canonical_form(F, 2, Kind::one);
    try {
        make_set(B, {Vec{0, 0}});
        CHECK(false);
    } catch (const OrthoError& e) {
        CHECK(code_of(e) == "ZeroVector");
    }
    try {
        make_set(B, {Vec{1, 0}, Vec{1, 0}});
        CHECK(false);
    } catch (const OrthoError& e) {
        CHECK(code_of(e) == "Duplicate");
    }
    try {
        make_set(B, {Vec{1, 0, 0}});
        CHECK(false);
    } catch (const OrthoError& e) {
        CHECK(code_of(e) == "ShapeMismatch");
    }
}

TEST_CASE("orthogonality and (k,l) reports") {
    OrthoSet basis = basis_set(3, 3, Kind::one);
    CHECK(is_orthogonal_set(basis));

    // add e1+e2: still (3,2) but not (2,2)
    FieldPtr F = field_from_order(3);
    BilinearForm B = canonical_form(F, 3, Kind::one);
    OrthoSet S = make_set(
        B, {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}, Vec{1, 1, 0}});
    CHECK_FALSE(is_orthogonal_set(S));
    KlReport r32 = is_kl_report(S, 3, 2);
    CHECK(r32.holds);
    CHECK(r32.witness.empty());
    KlReport r22 = is_kl_report(S, 2, 2);
    CHECK_FALSE(r22.holds);
    REQUIRE(r22.witness.size() == 2);
    // the witness names a genuinely non-orthogonal pair
    CHECK(eval_form(B, S.vectors[r22.witness[0]],
                    S.vectors[r22.witness[1]]) != 0);
    // general (k,l) path agrees with the fast path on a known case
    CHECK(is_kl_orthogonal(S, 4, 2));
    CHECK(is_kl_report(S, 4, 3).holds);  // {e1,e2,e3} sits in the 4-subset
    // general path, negative: only one orthogonal pair among four vectors
    OrthoSet S4 = make_set(
        B, {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{1, 1, 0}, Vec{1, 2, 0}});
    KlReport r43 = is_kl_report(S4, 4, 3);
    CHECK_FALSE(r43.holds);
    CHECK(r43.witness.size() == 4);
}

TEST_CASE("non-orthogonality graph matches the pairing") {
    FieldPtr F = field_from_order(3);
    BilinearForm B = canonical_form(F, 2, Kind::one);
    OrthoSet S = make_set(B, {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}});
    Graph G = nonorth_graph(S);
    CHECK(G.n == 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            CHECK(G.edge(i, j) ==
                  (eval_form(B, S.vectors[i], S.vectors[j]) != 0));
        }
    }
}

TEST_CASE("closed-form table values") {
    // largest orthogonal sets, odd q
    CHECK(bound_formulas(3, 3, Kind::one, BoundKind::s22).value == 3);
    CHECK(bound_formulas(3, 3, Kind::gamma, BoundKind::s22).value == 3);
    CHECK(bound_formulas(3, 4, Kind::one, BoundKind::s22).value == 8);
    CHECK(bound_formulas(3, 4, Kind::gamma, BoundKind::s22).value == 4);
    CHECK(bound_formulas(5, 2, Kind::one, BoundKind::s22).value == 4);
    CHECK(bound_formulas(5, 2, Kind::gamma, BoundKind::s22).value == 2);
    // binary closed form (stated): 2..8 -> 2,3,4,5,8,9,16
    const long long stated[] = {2, 3, 4, 5, 8, 9, 16};
    for (std::uint32_t n = 2; n <= 8; ++n) {
        CHECK(bound_formulas(2, n, Kind::dot, BoundKind::s22_binary).value ==
              stated[n - 2]);
    }
    // (3,2) closed forms
    CHECK(bound_formulas(7, 2, Kind::one, BoundKind::s32_odd_q).value == 12);
    CHECK(bound_formulas(7, 2, Kind::gamma, BoundKind::s32_odd_q).value == 4);
    CHECK(bound_formulas(7, 3, Kind::one, BoundKind::s32_odd_q).value == 15);
    CHECK(bound_formulas(2, 4, Kind::hyperbolic, BoundKind::s32_binary)
              .value == 6);
    CHECK(bound_formulas(2, 6, Kind::hyperbolic, BoundKind::s32_binary)
              .value == 14);
    CHECK(bound_formulas(2, 21, Kind::dot, BoundKind::s32_binary).value ==
          2049);
    CHECK(bound_formulas(2, 21, Kind::dot, BoundKind::s32_binary).in_range);
    CHECK_FALSE(
        bound_formulas(2, 4, Kind::dot, BoundKind::s32_binary).in_range);
    // (k,2) rational bound, floor exact also for odd n
    CHECK(bound_formulas(5, 2, Kind::one, BoundKind::k2_bound, 3).value ==
          20);
    CHECK(bound_formulas(3, 4, Kind::one, BoundKind::k2_bound, 2).value ==
          15);
    // floor(1*2*(2*sqrt(2)+1)/1) = floor(7.65..) = 7
    CHECK(bound_formulas(2, 3, Kind::dot, BoundKind::k2_bound, 2).value == 7);
    // arithmetic-mean bound and the all-anisotropic bound
    CHECK(bound_formulas(3, 4, Kind::one, BoundKind::am_32).value == 27);
    CHECK(bound_formulas(3, 5, Kind::one, BoundKind::d_bound).value == 14);
    CHECK(bound_formulas(3, 4, Kind::one, BoundKind::d_bound).value == 8);
    // per-vertex neighborhood table over GF(2)
    CHECK(bound_formulas(2, 7, Kind::dot, BoundKind::sv_binary).value == 7);
    CHECK(bound_formulas(2, 9, Kind::dot, BoundKind::sv_binary).value == 9);
    CHECK(bound_formulas(2, 8, Kind::dot, BoundKind::sv_binary).value == 8);
    CHECK(bound_formulas(2, 6, Kind::hyperbolic, BoundKind::sv_binary)
              .value == 4);
    // label round trip
    for (BoundKind k :
         {BoundKind::s22, BoundKind::s22_binary, BoundKind::s32_odd_q,
          BoundKind::s32_binary, BoundKind::k2_bound, BoundKind::am_32,
          BoundKind::d_bound, BoundKind::ahmmoh_lb, BoundKind::weak_binary,
          BoundKind::sv_binary}) {
        CHECK(bound_kind_from_label(bound_kind_label(k)) == k);
    }
    // guards
    try {
        bound_formulas(2, 4, Kind::dot, BoundKind::k2_bound, 3);
        CHECK(false);
    } catch (const OrthoError& e) {
        CHECK(code_of(e) == "BadParams");
    }
}

TEST_CASE("structure decomposition on a mixed set") {
    // two points of the same isotropic line are mutually orthogonal
    FieldPtr F = field_from_order(5);
    BilinearForm B = canonical_form(F, 2, Kind::one);
    OrthoSet S = make_set(B, {Vec{1, 1}, Vec{2, 2}});
    REQUIRE(is_orthogonal_set(S));
    StructDecomp d = struct_decompose(S);
    CHECK(d.dimV == 1);
    CHECK(d.T.empty());
    // a pure basis set decomposes to T = everything
    OrthoSet basis = basis_set(5, 3, Kind::one);
    StructDecomp db = struct_decompose(basis);
    CHECK(db.dimV == 0);
    CHECK(db.T.size() == 3);
}

TEST_CASE("neighborhood decomposition is self-verifying") {
    FieldPtr F = field_from_order(5);
    BilinearForm B = canonical_form(F, 3, Kind::one);
    // w = e1 + 2 e2 is not self-orthogonal under diag(1,-1,*)
    OrthoSet S = make_set(
        B, {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}, Vec{1, 2, 0}});
    REQUIRE(is_kl_orthogonal(S, 3, 2));
    NeighborhoodDecomp nd = neighborhood_decompose(S, Vec{0, 0, 1});
    CHECK(nd.S_s.empty());  // e3 is orthogonal to everything else here
    NeighborhoodDecomp nd1 = neighborhood_decompose(S, Vec{1, 0, 0});
    CHECK(nd1.S_s.size() == 1);
    CHECK(nd1.S_s[0] == Vec{1, 2, 0});
    CHECK(eval_form(B, Vec{1, 2, 0}, Vec{1, 2, 0}) != 0);
    CHECK(nd1.R_s.empty());
    CHECK(nd1.T_s.size() == 1);
    CHECK(nd1.k_s == 0);
    // and an isotropic neighbour lands in R_s
    OrthoSet S2 =
        make_set(B, {Vec{1, 0, 0}, Vec{0, 0, 1}, Vec{1, 1, 0}});
    REQUIRE(is_kl_orthogonal(S2, 3, 2));
    NeighborhoodDecomp nd2 = neighborhood_decompose(S2, Vec{1, 0, 0});
    CHECK(nd2.R_s.size() == 1);
    CHECK(nd2.T_s.empty());
    CHECK(nd2.k_s == 1);
    try {
        neighborhood_decompose(S, Vec{2, 2, 2});
        CHECK(false);
    } catch (const OrthoError& e) {
        CHECK(code_of(e) == "NotMember");
    }
}

TEST_CASE("line closure fills isotropic lines") {
    FieldPtr F = field_from_order(5);
    BilinearForm B = canonical_form(F, 2, Kind::one);
    OrthoSet S = make_set(B, {Vec{1, 1}});  // self-orthogonal
    OrthoSet C = line_closure(S);
    CHECK(C.size() == 4);  // all of {v, 2v, 3v, 4v}
    OrthoSet C2 = line_closure(C);
    CHECK(C2.size() == C.size());  // idempotent
    for (const Vec& v : C.vectors) {
        CHECK(eval_form(B, v, v) == 0);
    }
}

TEST_CASE("greedy maximal sets are deterministic per seed and maximal") {
    OrthoSet a = random_greedy_32(3, 3, Kind::one, 42);
    OrthoSet b = random_greedy_32(3, 3, Kind::one, 42);
    CHECK(a.vectors == b.vectors);
    CHECK(is_kl_orthogonal(a, 3, 2));
    CHECK(is_maximal_32(a));
    OrthoSet c = random_greedy_32(3, 3, Kind::one, 43);
    CHECK(is_maximal_32(c));
}
