#pragma once

#include <cstddef>
#include <vector>

#include "ortholab/gf.hpp"

namespace ortholab {

using Vec = std::vector<Felt>;

// Dense row-major matrix; not necessarily square unless an operation says so.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Felt> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Felt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Felt at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n) {
        Mat M(n, n);
        for (std::size_t i = 0; i < n; ++i) M.at(i, i) = 1;
        return M;
    }

    bool operator==(const Mat& o) const = default;

    bool square() const { return rows == cols; }
};

// --- element-wise helpers -------------------------------------------------
Vec vec_add(const Field& F, const Vec& x, const Vec& y);
Vec vec_sub(const Field& F, const Vec& x, const Vec& y);
Vec scalar_mul(const Field& F, Felt c, const Vec& x);
bool is_zero_vec(const Vec& x);

// --- matrix operations ----------------------------------------------------
Mat transpose(const Mat& M);
Mat mat_mul(const Field& F, const Mat& A, const Mat& B);     // ShapeMismatch
Vec mat_vec(const Field& F, const Mat& A, const Vec& x);     // ShapeMismatch
Mat mat_add(const Field& F, const Mat& A, const Mat& B);
Mat direct_sum(const Mat& A, const Mat& B);
Felt det(const Field& F, const Mat& M);                      // ShapeMismatch
std::size_t rank(const Field& F, const Mat& M);
Mat inverse(const Field& F, const Mat& M);                   // Degenerate

// Reduced row echelon form; pivot order: leftmost column, then least row
// index; pivot entries normalized to 1.  Optionally reports pivot columns.
Mat rref(const Field& F, const Mat& M, std::vector<std::size_t>* pivot_cols = nullptr);

// Echelonized deterministic basis of {x : Mx = 0}; empty iff M has full
// column rank.
std::vector<Vec> kernel_basis(const Field& F, const Mat& M);

// Echelonized basis of the span (rows of the RREF); canonical and idempotent.
std::vector<Vec> span_basis(const Field& F, const std::vector<Vec>& vectors);

// Is x in the span of basis?  (basis need not be echelonized)
bool in_span(const Field& F, const std::vector<Vec>& basis, const Vec& x);

// --- vector encoding ------------------------------------------------------
// index = sum coords[i] * q^i; the canonical enumeration order everywhere.
std::uint64_t encode_vec(const Field& F, const Vec& x);
Vec decode_vec(const Field& F, std::uint64_t index, std::size_t n);

}  // namespace ortholab
