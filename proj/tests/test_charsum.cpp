#include <cmath>
#include <complex>
#include <set>
#include <string>

#include "doctest.h"
#include "ortholab/charsum.hpp"
#include "ortholab/detrand.hpp"
#include "ortholab/errors.hpp"

using namespace ortholab;

namespace {

std::vector<Vec> all_vectors(const Field& F, std::uint32_t n) {
    unsigned long long total = 1;
    for (std::uint32_t i = 0; i < n; ++i) total *= F.q;
    std::vector<Vec> out;
    for (unsigned long long i = 0; i < total; ++i) {
        out.push_back(decode_vec(F, i, n));
    }
    return out;
}

}  // namespace

TEST_CASE("one-dimensional multiplication pairing over GF(3)") {
    FieldPtr F = field_from_order(3);
    BilinearForm B = canonical_form(F, 1, Kind::one);
    const std::vector<Vec> X = all_vectors(*F, 1);
    // sum_{x,y} psi(xy) = q (only x = 0 contributes a full inner sum)
    const std::complex<double> s = bilinear_char_sum(B, X, X);
    CHECK(std::abs(s - 3.0) < 1e-9);
    // orthogonal pairs: (0,y) and (x,0) -> 3 + 3 - 1 = 5
    CHECK(count_orthogonal_pairs(B, X, X) == 5);
}

TEST_CASE("exhaustive pair count over the full plane") {
    FieldPtr F = field_from_order(3);
    BilinearForm B = canonical_form(F, 2, Kind::one);
    const std::vector<Vec> X = all_vectors(*F, 2);
    // exact identity for a non-degenerate pairing on the whole space:
    // q^n * q^n / q + (q^n - q^(n-1)) ... computed directly: each nonzero x
    // has q^(n-1) orthogonal y, x = 0 has q^n.
    // (3^2 - 1) * 3 + 9 = 33
    CHECK(count_orthogonal_pairs(B, X, X) == 33);
}

TEST_CASE("singletons") {
    FieldPtr F = field_from_order(3);
    BilinearForm B = canonical_form(F, 2, Kind::one);
    const std::vector<Vec> Z = {Vec{0, 0}};
    const std::complex<double> s = bilinear_char_sum(B, Z, Z);
    CHECK(std::abs(s - 1.0) < 1e-12);
    CHECK(count_orthogonal_pairs(B, Z, Z) == 1);
}

TEST_CASE("subspace sums: the all-or-nothing dichotomy") {
    FieldPtr F = field_from_order(5);
    BilinearForm B = make_form(F, Mat::identity(2));
    // s orthogonal to H = <e1>: s = e2 -> |H| = 5
    const std::complex<double> hit =
        char_sum_subspace(B, Vec{0, 1}, {Vec{1, 0}});
    CHECK(std::abs(hit - 5.0) < 1e-9);
    // s not orthogonal to H -> 0
    const std::complex<double> miss =
        char_sum_subspace(B, Vec{1, 0}, {Vec{1, 0}});
    CHECK(std::abs(miss) < 1e-9);
    // trivial subspace -> 1
    const std::complex<double> triv = char_sum_subspace(B, Vec{1, 0}, {});
    CHECK(std::abs(triv - 1.0) < 1e-12);
    // whole line over GF(3), s = 1: full nontrivial character sum
    FieldPtr F3 = field_from_order(3);
    BilinearForm B1 = canonical_form(F3, 1, Kind::one);
    CHECK(std::abs(char_sum_subspace(B1, Vec{1}, {Vec{1}})) < 1e-9);
    // dependent generators are refused
    try {
        char_sum_subspace(B, Vec{1, 0}, {Vec{1, 0}, Vec{2, 0}});
        CHECK(false);
    } catch (const OrthoError& e) {
        CHECK(std::string(e.code()) == "BadParams");
    }
}

TEST_CASE("subspace sums hold for degenerate forms too") {
    FieldPtr F = field_from_order(3);
    Mat Z(2, 2);  // identically zero pairing
    BilinearForm B = make_form(F, Z);
    const std::complex<double> s =
        char_sum_subspace(B, Vec{1, 1}, {Vec{1, 0}, Vec{0, 1}});
    CHECK(std::abs(s - 9.0) < 1e-9);  // everything is orthogonal
}

TEST_CASE("pair operations require a non-degenerate form") {
    FieldPtr F = field_from_order(3);
    Mat Z(2, 2);
    BilinearForm B = make_form(F, Z);
    const std::vector<Vec> X = {Vec{1, 0}};
    try {
        bilinear_char_sum(B, X, X);
        CHECK(false);
    } catch (const OrthoError& e) {
        CHECK(std::string(e.code()) == "Degenerate");
    }
    try {
        count_orthogonal_pairs(B, X, X);
        CHECK(false);
    } catch (const OrthoError& e) {
        CHECK(std::string(e.code()) == "Degenerate");
    }
}

TEST_CASE("count is symmetric for symmetric forms") {
    FieldPtr F = field_from_order(7);
    BilinearForm B = canonical_form(F, 2, Kind::one);
    DetRand rng(9);
    for (int t = 0; t < 20; ++t) {
        std::vector<Vec> X, Y;
        const std::size_t sx = 1 + rng.below(20), sy = 1 + rng.below(20);
        std::set<std::uint64_t> seenx, seeny;
        while (seenx.size() < sx) seenx.insert(rng.below(49));
        while (seeny.size() < sy) seeny.insert(rng.below(49));
        for (auto i : seenx) X.push_back(decode_vec(*F, i, 2));
        for (auto i : seeny) Y.push_back(decode_vec(*F, i, 2));
        CHECK(count_orthogonal_pairs(B, X, Y) ==
              count_orthogonal_pairs(B, Y, X));
        // and the double sum obeys the square-root bound (asserted inside)
        bilinear_char_sum(B, X, Y);
    }
}

TEST_CASE("coset shift leaves subspace sums' modulus predictable") {
    // |sum over H of psi(B(s, h + t))| equals |psi(B(s,t))| * |sum over H|
    FieldPtr F = field_from_order(5);
    BilinearForm B = make_form(F, Mat::identity(2));
    const std::complex<double> base =
        char_sum_subspace(B, Vec{0, 1}, {Vec{1, 0}});
    // shifting the subspace multiplies the sum by a unit scalar, so the
    // modulus is preserved; check against the direct computation
    std::complex<double> direct = 0;
    for (Felt a = 0; a < 5; ++a) {
        const Vec h{a, 3};  // coset <e1> + (0,3)
        direct += F->psi(eval_form(B, Vec{0, 1}, h));
    }
    CHECK(std::abs(std::abs(direct) - std::abs(base)) < 1e-9);
}
