#include "ortholab/linalg.hpp"

namespace ortholab {

Vec vec_add(const Field& F, const Vec& x, const Vec& y) {
    require(x.size() == y.size(), "ShapeMismatch", "vector sizes differ");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.add(x[i], y[i]);
    return out;
}

Vec vec_sub(const Field& F, const Vec& x, const Vec& y) {
    require(x.size() == y.size(), "ShapeMismatch", "vector sizes differ");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.sub(x[i], y[i]);
    return out;
}

Vec scalar_mul(const Field& F, Felt c, const Vec& x) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.mul(c, x[i]);
    return out;
}

bool is_zero_vec(const Vec& x) {
    for (Felt c : x)
        if (c) return false;
    return true;
}

Mat transpose(const Mat& M) {
    Mat T(M.cols, M.rows);
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) T.at(j, i) = M.at(i, j);
    return T;
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
    require(A.cols == B.rows, "ShapeMismatch", "matrix product shape mismatch");
    Mat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            Felt v = A.at(i, k);
            if (!v) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(v, B.at(k, j)));
        }
    return C;
}

Vec mat_vec(const Field& F, const Mat& A, const Vec& x) {
    require(A.cols == x.size(), "ShapeMismatch", "matrix-vector shape mismatch");
    Vec out(A.rows, 0);
    for (std::size_t i = 0; i < A.rows; ++i) {
        Felt acc = 0;
        for (std::size_t j = 0; j < A.cols; ++j)
            acc = F.add(acc, F.mul(A.at(i, j), x[j]));
        out[i] = acc;
    }
    return out;
}

Mat mat_add(const Field& F, const Mat& A, const Mat& B) {
    require(A.rows == B.rows && A.cols == B.cols, "ShapeMismatch",
            "matrix sum shape mismatch");
    Mat C(A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

Mat direct_sum(const Mat& A, const Mat& B) {
    Mat C(A.rows + B.rows, A.cols + B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (std::size_t i = 0; i < B.rows; ++i)
        for (std::size_t j = 0; j < B.cols; ++j)
            C.at(A.rows + i, A.cols + j) = B.at(i, j);
    return C;
}

Mat rref(const Field& F, const Mat& M, std::vector<std::size_t>* pivot_cols) {
    Mat R = M;
    if (pivot_cols) pivot_cols->clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < R.cols && r < R.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < R.rows && R.at(pivot, c) == 0) ++pivot;
        if (pivot == R.rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < R.cols; ++j)
                std::swap(R.at(pivot, j), R.at(r, j));
        Felt s = F.inv(R.at(r, c));
        for (std::size_t j = 0; j < R.cols; ++j) R.at(r, j) = F.mul(s, R.at(r, j));
        for (std::size_t i = 0; i < R.rows; ++i) {
            if (i == r) continue;
            Felt f = R.at(i, c);
            if (!f) continue;
            for (std::size_t j = 0; j < R.cols; ++j)
                R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(r, j)));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return R;
}

std::size_t rank(const Field& F, const Mat& M) {
    std::vector<std::size_t> pivots;
    rref(F, M, &pivots);
    return pivots.size();
}

Felt det(const Field& F, const Mat& M) {
    require(M.square(), "ShapeMismatch", "determinant of non-square matrix");
    Mat R = M;
    const std::size_t n = R.rows;
    Felt d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && R.at(pivot, c) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(R.at(pivot, j), R.at(c, j));
            d = F.neg(d);
        }
        d = F.mul(d, R.at(c, c));
        Felt s = F.inv(R.at(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            Felt f = F.mul(s, R.at(i, c));
            if (!f) continue;
            for (std::size_t j = c; j < n; ++j)
                R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(c, j)));
        }
    }
    return d;
}

Mat inverse(const Field& F, const Mat& M) {
    require(M.square(), "ShapeMismatch", "inverse of non-square matrix");
    const std::size_t n = M.rows;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots;
    Mat R = rref(F, aug, &pivots);
    require(pivots.size() == n, "Degenerate", "matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = R.at(i, n + j);
    return inv;
}

std::vector<Vec> kernel_basis(const Field& F, const Mat& M) {
    std::vector<std::size_t> pivots;
    Mat R = rref(F, M, &pivots);
    std::vector<bool> is_pivot(M.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t j = 0; j < M.cols; ++j) {
        if (is_pivot[j]) continue;
        Vec v(M.cols, 0);
        v[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = F.neg(R.at(i, j));
        basis.push_back(std::move(v));
    }
    // Canonicalize: echelonize the raw basis (idempotent for the common case).
    return span_basis(F, basis);
}

std::vector<Vec> span_basis(const Field& F, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return {};
    const std::size_t n = vectors[0].size();
    for (const Vec& v : vectors)
        require(v.size() == n, "ShapeMismatch", "span of mixed-dimension vectors");
    Mat M(vectors.size(), n);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) M.at(i, j) = vectors[i][j];
    std::vector<std::size_t> pivots;
    Mat R = rref(F, M, &pivots);
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Vec v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = R.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const Field& F, const std::vector<Vec>& basis, const Vec& x) {
    if (is_zero_vec(x)) return true;
    std::vector<Vec> with = basis;
    with.push_back(x);
    return span_basis(F, with).size() == span_basis(F, basis).size();
}

std::uint64_t encode_vec(const Field& F, const Vec& x) {
    std::uint64_t idx = 0, mult = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        idx += static_cast<std::uint64_t>(x[i]) * mult;
        mult *= F.q;
    }
    return idx;
}

Vec decode_vec(const Field& F, std::uint64_t index, std::size_t n) {
    Vec x(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = static_cast<Felt>(index % F.q);
        index /= F.q;
    }
    return x;
}

}  // namespace ortholab
