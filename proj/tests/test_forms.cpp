#include "doctest.h"
#include "ortholab/detrand.hpp"
#include "ortholab/errors.hpp"
#include "ortholab/forms.hpp"

using namespace ortholab;

namespace {

Mat random_symmetric(const Field& F, std::size_t n, DetRand& rng) {
    Mat A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Felt v = static_cast<Felt>(rng.below(F.q));
            A.at(i, j) = v;
            A.at(j, i) = v;
        }
    }
    return A;
}

}  // namespace

TEST_CASE("canonical forms classify as their own class") {
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
        FieldPtr F = field_from_order(q);
        for (std::uint32_t n = 1; n <= 5; ++n) {
            for (Kind cls : {Kind::one, Kind::gamma}) {
                BilinearForm B = canonical_form(F, n, cls);
                FormClass fc = classify(B);
                CHECK(fc.kind == cls);
                CHECK(fc.rank == n);
            }
        }
    }
    FieldPtr F2 = field_from_order(2);
    for (std::uint32_t n = 1; n <= 6; ++n) {
        CHECK(classify(canonical_form(F2, n, Kind::dot)).kind == Kind::dot);
        if (n % 2 == 0) {
            CHECK(classify(canonical_form(F2, n, Kind::hyperbolic)).kind ==
                  Kind::hyperbolic);
        }
    }
}

TEST_CASE("diagonalize: exact congruence, odd q") {
    for (std::uint32_t q : {3u, 9u}) {
        FieldPtr F = field_from_order(q);
        DetRand rng(100 + q);
        for (int t = 0; t < 100; ++t) {
            BilinearForm B = make_form(F, random_symmetric(*F, 4, rng));
            DiagResult d = diagonalize(B);
            for (std::size_t i = 0; i < 4; ++i) {
                for (std::size_t j = 0; j < 4; ++j) {
                    if (i != j) CHECK(d.D.at(i, j) == 0);
                }
            }
            CHECK(mat_mul(*F, transpose(d.M), mat_mul(*F, B.A, d.M)) == d.D);
            CHECK(det(*F, d.M) != 0);
        }
    }
}

TEST_CASE("epsilon is a congruence invariant") {
    FieldPtr F = field_from_order(5);
    DetRand rng(7);
    for (int t = 0; t < 100; ++t) {
        Mat A = random_symmetric(*F, 3, rng);
        if (det(*F, A) == 0) continue;
        BilinearForm B = make_form(F, A);
        // random invertible congruence
        Mat M(3, 3);
        do {
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) {
                    M.at(i, j) = static_cast<Felt>(rng.below(5));
                }
            }
        } while (det(*F, M) == 0);
        BilinearForm C =
            make_form(F, mat_mul(*F, transpose(M), mat_mul(*F, A, M)));
        CHECK(epsilon(B) == epsilon(C));
        CHECK(classify(B).kind == classify(C).kind);
    }
}

TEST_CASE("equivalence witness: exact and refusing impossible pairs") {
    FieldPtr F = field_from_order(3);
    BilinearForm one = canonical_form(F, 2, Kind::one);
    BilinearForm gam = canonical_form(F, 2, Kind::gamma);
    Mat W = equivalence_witness(one, one);
    CHECK(mat_mul(*F, transpose(W), mat_mul(*F, one.A, W)) == one.A);
    CHECK_THROWS_AS(equivalence_witness(one, gam), OrthoError);
    try {
        equivalence_witness(one, gam);
    } catch (const OrthoError& e) {
        CHECK(std::string(e.code()) == "NotEquivalent");
    }
}

TEST_CASE("eval_form is the Gram pairing") {
    FieldPtr F = field_from_order(5);
    BilinearForm B = canonical_form(F, 3, Kind::one);
    DetRand rng(3);
    for (int t = 0; t < 50; ++t) {
        Vec x{static_cast<Felt>(rng.below(5)), static_cast<Felt>(rng.below(5)),
              static_cast<Felt>(rng.below(5))};
        Vec y{static_cast<Felt>(rng.below(5)), static_cast<Felt>(rng.below(5)),
              static_cast<Felt>(rng.below(5))};
        // symmetric
        CHECK(eval_form(B, x, y) == eval_form(B, y, x));
        // bilinear in the first slot
        Vec x2 = scalar_mul(*F, 2, x);
        CHECK(eval_form(B, x2, y) == F->mul(2, eval_form(B, x, y)));
    }
}

TEST_CASE("orthogonal complement has complementary dimension") {
    FieldPtr F = field_from_order(3);
    BilinearForm B = canonical_form(F, 4, Kind::one);
    const std::vector<Vec> comp =
        orthogonal_complement(B, {Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0}});
    CHECK(comp.size() == 2);
    for (const Vec& v : comp) {
        CHECK(eval_form(B, v, Vec{1, 0, 0, 0}) == 0);
        CHECK(eval_form(B, v, Vec{0, 1, 0, 0}) == 0);
    }
}

TEST_CASE("restriction: the alternating-signs pair that degenerates") {
    FieldPtr F = field_from_order(3);
    Mat A(4, 4);
    A.at(0, 0) = 1;
    A.at(1, 1) = 2;
    A.at(2, 2) = 1;
    A.at(3, 3) = 2;
    BilinearForm B = make_form(F, A);
    RestrictResult r = restrict_to_complement(B, {1, 0, 0, 0}, {1, 1, 1, 0});
    CHECK_FALSE(r.hypothesis_holds);
    CHECK(r.degenerate);
    // and a pair where the hypothesis holds: dimension drops by exactly two
    RestrictResult good =
        restrict_to_complement(B, {1, 0, 0, 0}, {0, 1, 0, 0});
    CHECK(good.hypothesis_holds);
    CHECK_FALSE(good.degenerate);
    CHECK(good.basis.size() == 2);
    CHECK_THROWS_AS(restrict_to_complement(B, {1, 0, 0, 0}, {2, 0, 0, 0}),
                    OrthoError);
}

TEST_CASE("isotropic vectors and the Witt index") {
    FieldPtr F = field_from_order(3);
    // the non-square-discriminant plane over GF(3) is anisotropic (x^2+y^2);
    // the other one is split (x^2-y^2) and has (1,1)
    CHECK_FALSE(find_isotropic(canonical_form(F, 2, Kind::gamma)).has_value());
    CHECK(find_isotropic(canonical_form(F, 2, Kind::one)).has_value());
    // dimension >= 3 always has one
    auto v = find_isotropic(canonical_form(F, 3, Kind::one));
    REQUIRE(v.has_value());
    BilinearForm B3 = canonical_form(F, 3, Kind::one);
    CHECK(eval_form(B3, *v, *v) == 0);
    CHECK_FALSE(is_zero_vec(*v));

    FieldPtr F2 = field_from_order(2);
    CHECK(witt_index(canonical_form(F2, 6, Kind::hyperbolic)) == 3);
    CHECK(d_n_formula(3, 5, Kind::one) == 2);
    CHECK(d_n_formula(3, 4, Kind::one) == 2);
    CHECK(d_n_formula(3, 4, Kind::gamma) == 1);
    CHECK(d_n_formula(2, 4, Kind::hyperbolic) == 2);
    CHECK(d_n_formula(2, 5, Kind::dot) == 2);
    CHECK(d_n_formula(2, 1, Kind::dot) == 0);
}

TEST_CASE("square roots in encoding order") {
    FieldPtr F = field_from_order(9);
    CHECK(sqrt_element(*F, 0) == 0);
    for (Felt a = 0; a < 9; ++a) {
        auto r = sqrt_element(*F, a);
        if (F->is_square(a)) {
            REQUIRE(r.has_value());
            CHECK(F->mul(*r, *r) == a);
        } else {
            CHECK_FALSE(r.has_value());
        }
    }
}

TEST_CASE("GF(2^m) with m > 1 refuses classification") {
    FieldPtr F4 = field_from_order(4);
    BilinearForm B = make_form(F4, Mat::identity(2));
    try {
        classify(B);
        CHECK(false);
    } catch (const OrthoError& e) {
        CHECK(std::string(e.code()) == "EvenField");
    }
}
