#include <cmath>
#include <complex>

#include "doctest.h"
#include "ortholab/errors.hpp"
#include "ortholab/gf.hpp"

using namespace ortholab;

namespace {

std::string thrown_code(void (*fn)()) {
    try {
        fn();
    } catch (const OrthoError& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("prime fields: arithmetic tables") {
    FieldPtr F = field_from_order(7);
    CHECK(F->p == 7);
    CHECK(F->m == 1);
    CHECK(F->q == 7);
    for (Felt a = 0; a < 7; ++a) {
        CHECK(F->add(a, F->neg(a)) == 0);
        if (a != 0) {
            CHECK(F->mul(a, F->inv(a)) == 1);
        }
        for (Felt b = 0; b < 7; ++b) {
            CHECK(F->mul(a, b) == (a * b) % 7);
            CHECK(F->add(a, b) == (a + b) % 7);
        }
    }
    CHECK(F->sub(2, 5) == 4);
    CHECK(F->pow(3, 6) == 1);  // Fermat
}

TEST_CASE("GF(9): first irreducible modulus in encoding order") {
    FieldPtr F = field_from_order(9);
    CHECK(F->p == 3);
    CHECK(F->m == 2);
    // x^2 + 1 (coefficients c_0=1, c_1=0, c_2=1) is the first monic
    // irreducible quadratic over GF(3) in encoding order.
    CHECK(F->modulus == std::vector<std::uint32_t>{1, 0, 1});
    // Field axioms on every element.
    for (Felt a = 0; a < 9; ++a) {
        CHECK(F->add(a, F->neg(a)) == 0);
        if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
        for (Felt b = 0; b < 9; ++b) {
            CHECK(F->mul(a, b) == F->mul(b, a));
            for (Felt c = 0; c < 9; ++c) {
                CHECK(F->mul(a, F->add(b, c)) ==
                      F->add(F->mul(a, b), F->mul(a, c)));
            }
        }
    }
}

TEST_CASE("squares: exactly (q+1)/2 squares including zero, gamma is not one") {
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u}) {
        FieldPtr F = field_from_order(q);
        std::uint32_t squares = 0;
        for (Felt a = 0; a < F->q; ++a) {
            if (F->is_square(a)) ++squares;
        }
        CHECK(squares == (q + 1) / 2);
        CHECK_FALSE(F->is_square(F->gamma));
        CHECK(F->gamma != 0);
    }
}

TEST_CASE("trace and additive character") {
    FieldPtr F = field_from_order(9);
    // trace lands in the prime field and is additive
    for (Felt a = 0; a < 9; ++a) {
        CHECK(F->trace(a) < F->p);
        for (Felt b = 0; b < 9; ++b) {
            CHECK(F->trace(F->add(a, b)) == (F->trace(a) + F->trace(b)) % 3);
        }
    }
    // psi has unit modulus; the full character sum vanishes
    std::complex<double> total = 0;
    for (Felt a = 0; a < 9; ++a) {
        CHECK(std::abs(std::abs(F->psi(a)) - 1.0) < 1e-12);
        total += F->psi(a);
    }
    CHECK(std::abs(total) < 1e-9);
    CHECK(std::abs(F->psi(0) - 1.0) < 1e-12);
}

TEST_CASE("field creation errors") {
    CHECK(thrown_code([] { field_from_order(6); }) == "NotPrime");
    CHECK(thrown_code([] { field_from_order(1); }) == "NotPrime");
    CHECK(thrown_code([] { field_create(4, 1); }) == "NotPrime");
    CHECK(thrown_code([] { field_from_order(0); }) == "NotPrime");
    // the order cap
    CHECK(thrown_code([] { field_create(2, 17); }) != "");
}

TEST_CASE("GF(4) exists (creation is independent of form classification)") {
    FieldPtr F = field_from_order(4);
    CHECK(F->q == 4);
    for (Felt a = 1; a < 4; ++a) CHECK(F->mul(a, F->inv(a)) == 1);
    // characteristic 2: x + x = 0
    for (Felt a = 0; a < 4; ++a) CHECK(F->add(a, a) == 0);
}

TEST_CASE("from_int reduces mod p") {
    FieldPtr F = field_from_order(5);
    CHECK(F->from_int(-1) == 4);
    CHECK(F->from_int(7) == 2);
    CHECK(F->from_int(0) == 0);
}
