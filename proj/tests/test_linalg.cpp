#include "doctest.h"
#include "ortholab/detrand.hpp"
#include "ortholab/errors.hpp"
#include "ortholab/linalg.hpp"

using namespace ortholab;

namespace {

Mat random_matrix(const Field& F, std::size_t r, std::size_t c, DetRand& rng) {
    Mat M(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            M.at(i, j) = static_cast<Felt>(rng.below(F.q));
        }
    }
    return M;
}

}  // namespace

TEST_CASE("inverse round-trip and determinant multiplicativity") {
    FieldPtr F = field_from_order(5);
    DetRand rng(11);
    int invertible = 0;
    for (int t = 0; t < 200; ++t) {
        Mat M = random_matrix(*F, 4, 4, rng);
        const Felt d = det(*F, M);
        if (d == 0) continue;
        ++invertible;
        Mat Mi = inverse(*F, M);
        CHECK(mat_mul(*F, M, Mi) == Mat::identity(4));
        CHECK(mat_mul(*F, Mi, M) == Mat::identity(4));
        Mat N = random_matrix(*F, 4, 4, rng);
        CHECK(det(*F, mat_mul(*F, M, N)) == F->mul(d, det(*F, N)));
    }
    CHECK(invertible > 100);
}

TEST_CASE("rank, kernel and span") {
    FieldPtr F = field_from_order(3);
    Mat M(3, 3);
    // rows: (1,2,0), (0,1,0), (0,0,0) -> rank 2
    M.at(0, 0) = 1;
    M.at(0, 1) = 2;
    M.at(1, 1) = 1;
    CHECK(rank(*F, M) == 2);
    const std::vector<Vec> ker = kernel_basis(*F, M);
    CHECK(ker.size() == 1);
    for (const Vec& v : ker) {
        const Vec img = mat_vec(*F, M, v);
        CHECK(is_zero_vec(img));
    }
    std::vector<Vec> basis = span_basis(*F, {{1, 2, 0}, {2, 1, 0}, {0, 1, 0}});
    CHECK(basis.size() == 2);
    CHECK(in_span(*F, basis, Vec{1, 0, 0}));
    CHECK_FALSE(in_span(*F, basis, Vec{0, 0, 1}));
}

TEST_CASE("rref is idempotent") {
    FieldPtr F = field_from_order(7);
    DetRand rng(5);
    for (int t = 0; t < 50; ++t) {
        Mat M = random_matrix(*F, 3, 5, rng);
        Mat R = rref(*F, M);
        CHECK(rref(*F, R) == R);
    }
}

TEST_CASE("vector encoding round-trip covers the whole space") {
    FieldPtr F = field_from_order(9);
    for (std::uint64_t idx = 0; idx < 81; ++idx) {
        const Vec v = decode_vec(*F, idx, 2);
        CHECK(encode_vec(*F, v) == idx);
    }
}

TEST_CASE("vector algebra") {
    FieldPtr F = field_from_order(5);
    const Vec a{1, 2, 3}, b{4, 4, 0};
    CHECK(vec_add(*F, a, b) == Vec{0, 1, 3});
    CHECK(vec_sub(*F, a, b) == Vec{2, 3, 3});
    CHECK(scalar_mul(*F, 2, a) == Vec{2, 4, 1});
    CHECK(is_zero_vec(Vec{0, 0}));
    CHECK_FALSE(is_zero_vec(a));
}

TEST_CASE("shape errors") {
    FieldPtr F = field_from_order(3);
    Mat A(2, 3), B(2, 3);
    CHECK_THROWS_AS(mat_mul(*F, A, B), OrthoError);
    CHECK_THROWS_AS(det(*F, A), OrthoError);
    CHECK_THROWS_AS(vec_add(*F, Vec{1}, Vec{1, 2}), OrthoError);
}

TEST_CASE("direct sum stacks blocks") {
    FieldPtr F = field_from_order(3);
    Mat A = Mat::identity(2);
    Mat B(1, 1);
    B.at(0, 0) = 2;
    Mat S = direct_sum(A, B);
    CHECK(S.rows == 3);
    CHECK(S.at(0, 0) == 1);
    CHECK(S.at(2, 2) == 2);
    CHECK(S.at(0, 2) == 0);
}
