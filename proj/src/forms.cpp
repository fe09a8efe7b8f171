#include "ortholab/forms.hpp"

#include <algorithm>

namespace ortholab {

std::string kind_label(Kind k) {
    switch (k) {
        case Kind::zero: return "zero";
        case Kind::one: return "one";
        case Kind::gamma: return "gamma";
        case Kind::dot: return "dot";
        case Kind::hyperbolic: return "hyperbolic";
        case Kind::degenerate: return "degenerate";
    }
    fail("BadClass", "unknown class tag");
}

Kind kind_from_label(const std::string& s) {
    if (s == "zero") return Kind::zero;
    if (s == "one") return Kind::one;
    if (s == "gamma") return Kind::gamma;
    if (s == "dot") return Kind::dot;
    if (s == "hyperbolic") return Kind::hyperbolic;
    if (s == "degenerate") return Kind::degenerate;
    fail("BadClass", "unknown class label '" + s + "'");
}

BilinearForm make_form(FieldPtr F, Mat A) {
    require(static_cast<bool>(F), "BadParams", "form requires a field");
    require(A.square(), "ShapeMismatch", "form matrix must be square");
    for (Felt v : A.a) F->check_element(v);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = i + 1; j < A.cols; ++j)
            require(A.at(i, j) == A.at(j, i), "ShapeMismatch",
                    "form matrix must be symmetric");
    return BilinearForm{std::move(F), std::move(A)};
}

Felt eval_form(const BilinearForm& B, const Vec& x, const Vec& y) {
    const Field& F = *B.F;
    require(x.size() == B.A.rows && y.size() == B.A.rows, "ShapeMismatch",
            "vector dimension does not match the form");
    Felt acc = 0;
    for (std::size_t i = 0; i < B.A.rows; ++i) {
        if (!x[i]) continue;
        Felt row = 0;
        for (std::size_t j = 0; j < B.A.cols; ++j)
            if (y[j]) row = F.add(row, F.mul(B.A.at(i, j), y[j]));
        acc = F.add(acc, F.mul(x[i], row));
    }
    return acc;
}

bool is_degenerate(const BilinearForm& B) { return det(*B.F, B.A) == 0; }

Kind epsilon(const BilinearForm& B) {
    const Field& F = *B.F;
    require(F.odd(), "EvenField", "epsilon is defined for odd q only");
    Felt d = det(F, B.A);
    if (d == 0) return Kind::zero;
    std::uint32_t k = static_cast<std::uint32_t>(B.A.rows) / 2;
    Felt probe = (k % 2 == 0) ? d : F.neg(d);
    return F.is_square(probe) ? Kind::one : Kind::gamma;
}

Felt epsilon_element(const BilinearForm& B) {
    switch (epsilon(B)) {
        case Kind::zero: return 0;
        case Kind::one: return 1;
        default: return B.F->gamma;
    }
}

FormClass classify(const BilinearForm& B) {
    const Field& F = *B.F;
    FormClass out;
    out.n = static_cast<std::uint32_t>(B.A.rows);
    out.rank = static_cast<std::uint32_t>(rank(F, B.A));
    if (F.odd()) {
        out.kind = epsilon(B);
        return out;
    }
    require(F.q == 2, "EvenField",
            "classification over GF(2^m) with m > 1 is out of scope");
    if (out.rank < out.n) {
        out.kind = Kind::degenerate;
        return out;
    }
    bool alternating = true;
    for (std::size_t i = 0; i < B.A.rows; ++i)
        if (B.A.at(i, i) != 0) alternating = false;
    out.kind = alternating ? Kind::hyperbolic : Kind::dot;
    // A non-degenerate alternating form has even rank.
    require(out.kind != Kind::hyperbolic || out.n % 2 == 0, "InvariantViolation",
            "odd-dimensional non-degenerate alternating form");
    return out;
}

Mat canonical_matrix(const Field& F, std::uint32_t n, Kind cls) {
    if (F.odd()) {
        require(cls == Kind::one || cls == Kind::gamma, "BadClass",
                "odd-q canonical classes are 'one' and 'gamma'");
        require(n >= 1 || cls == Kind::one, "BadClass",
                "empty form is class one");
        Felt eps = (cls == Kind::one) ? 1 : F.gamma;
        Mat D(n, n);
        if (n == 0) return D;
        if (n % 2 == 1) {
            for (std::uint32_t i = 0; i + 1 < n; i += 2) {
                D.at(i, i) = 1;
                D.at(i + 1, i + 1) = F.neg(1);
            }
            D.at(n - 1, n - 1) = eps;
        } else {
            for (std::uint32_t i = 0; i + 2 < n; i += 2) {
                D.at(i, i) = 1;
                D.at(i + 1, i + 1) = F.neg(1);
            }
            D.at(n - 2, n - 2) = 1;
            D.at(n - 1, n - 1) = F.neg(eps);
        }
        return D;
    }
    require(F.q == 2, "EvenField",
            "canonical forms over GF(2^m) with m > 1 are out of scope");
    if (cls == Kind::dot) {
        require(n >= 1, "BadClass", "dot class needs n >= 1");
        return Mat::identity(n);
    }
    require(cls == Kind::hyperbolic, "BadClass",
            "binary canonical classes are 'dot' and 'hyperbolic'");
    require(n % 2 == 0, "BadClass", "hyperbolic class needs even n");
    Mat H(n, n);
    for (std::uint32_t i = 0; i + 1 < n; i += 2) {
        H.at(i, i + 1) = 1;
        H.at(i + 1, i) = 1;
    }
    return H;
}

BilinearForm canonical_form(FieldPtr F, std::uint32_t n, Kind cls) {
    Mat M = canonical_matrix(*F, n, cls);
    return make_form(std::move(F), std::move(M));
}

namespace {

// Column operations tracked on (A, M) so that M^T A_orig M = A stays true.
void col_swap(Mat& A, Mat& M, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
    for (std::size_t c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
    for (std::size_t r = 0; r < M.rows; ++r) std::swap(M.at(r, i), M.at(r, j));
}

// basis vector v_dst += f * v_src
void col_axpy(const Field& F, Mat& A, Mat& M, std::size_t dst, std::size_t src,
              Felt f) {
    for (std::size_t r = 0; r < A.rows; ++r)
        A.at(r, dst) = F.add(A.at(r, dst), F.mul(f, A.at(r, src)));
    for (std::size_t c = 0; c < A.cols; ++c)
        A.at(dst, c) = F.add(A.at(dst, c), F.mul(f, A.at(src, c)));
    for (std::size_t r = 0; r < M.rows; ++r)
        M.at(r, dst) = F.add(M.at(r, dst), F.mul(f, M.at(r, src)));
}

// basis vector v_dst *= s
void col_scale(const Field& F, Mat& A, Mat& M, std::size_t dst, Felt s) {
    for (std::size_t r = 0; r < A.rows; ++r)
        A.at(r, dst) = F.mul(s, A.at(r, dst));
    for (std::size_t c = 0; c < A.cols; ++c)
        A.at(dst, c) = F.mul(s, A.at(dst, c));
    for (std::size_t r = 0; r < M.rows; ++r)
        M.at(r, dst) = F.mul(s, M.at(r, dst));
}

bool is_diagonal(const Mat& A) {
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            if (i != j && A.at(i, j) != 0) return false;
    return true;
}

void verify_congruence(const BilinearForm& B, const Mat& M, const Mat& D,
                       const char* what) {
    Mat check = mat_mul(*B.F, mat_mul(*B.F, transpose(M), B.A), M);
    require(check == D, "InvariantViolation", what);
}

}  // namespace

DiagResult diagonalize(const BilinearForm& B) {
    const Field& F = *B.F;
    require(F.odd(), "EvenField", "diagonalization requires odd characteristic");
    const std::size_t n = B.A.rows;
    Mat A = B.A;
    Mat M = Mat::identity(n);

    for (std::size_t i = 0; i < n; ++i) {
        if (A.at(i, i) == 0) {
            std::size_t j = i + 1;
            while (j < n && A.at(j, j) == 0) ++j;
            if (j < n) {
                col_swap(A, M, i, j);
            } else {
                // Whole remaining diagonal is zero: look for an off-diagonal
                // entry b != 0 and replace v_r by v_r + v_c, which makes the
                // (r,r) entry 2b != 0 in odd characteristic.
                std::size_t fr = n, fc = n;
                for (std::size_t r = i; r < n && fr == n; ++r)
                    for (std::size_t c = r + 1; c < n; ++c)
                        if (A.at(r, c) != 0) {
                            fr = r;
                            fc = c;
                            break;
                        }
                if (fr == n) break;  // remaining block is identically zero
                col_axpy(F, A, M, fr, fc, 1);
                if (fr != i) col_swap(A, M, i, fr);
            }
        }
        Felt pivot_inv = F.inv(A.at(i, i));
        for (std::size_t j = i + 1; j < n; ++j) {
            Felt f = A.at(i, j);
            if (!f) continue;
            col_axpy(F, A, M, j, i, F.neg(F.mul(pivot_inv, f)));
        }
    }
    require(is_diagonal(A), "InvariantViolation", "diagonalization left residue");
    verify_congruence(B, M, A, "diagonalization congruence failed");
    return DiagResult{A, M};
}

std::optional<Felt> sqrt_element(const Field& F, Felt v) {
    F.check_element(v);
    if (v == 0) return Felt{0};
    for (Felt t = 1; t < F.q; ++t)
        if (F.mul(t, t) == v) return t;
    return std::nullopt;
}

namespace {

// ---- normal-form engines used by equivalence_witness ----------------------

// Odd q, non-degenerate: returns P with P^T A P = diag(1,...,1[,gamma]).
Mat to_normal_odd(const BilinearForm& B) {
    const Field& F = *B.F;
    const std::size_t n = B.A.rows;
    DiagResult dg = diagonalize(B);
    Mat A = dg.D, M = dg.M;

    // Scale every diagonal entry into {1, gamma}.
    for (std::size_t i = 0; i < n; ++i) {
        Felt d = A.at(i, i);
        require(d != 0, "Degenerate", "normal form requires a non-degenerate form");
        Felt target = F.is_square(d) ? d : F.mul(d, F.inv(F.gamma));
        Felt root = *sqrt_element(F, target);  // exists by construction
        col_scale(F, A, M, i, F.inv(root));
    }

    // Convert gamma pairs to 1s: with p1^2 + p2^2 = gamma^{-1}, the basis
    // change (u,v) -> (p1*u + p2*v, -p2*u + p1*v) maps diag(g,g) to diag(1,1).
    std::vector<std::size_t> gs;
    for (std::size_t i = 0; i < n; ++i)
        if (A.at(i, i) == F.gamma) gs.push_back(i);
    if (gs.size() >= 2) {
        Felt target = F.inv(F.gamma);
        Felt p1 = 0, p2 = 0;
        bool found = false;
        for (Felt c1 = 0; c1 < F.q && !found; ++c1) {
            Felt rem = F.sub(target, F.mul(c1, c1));
            auto r = sqrt_element(F, rem);
            if (r) {
                p1 = c1;
                p2 = *r;
                found = true;
            }
        }
        require(found, "InvariantViolation", "sum-of-two-squares search failed");
        for (std::size_t t = 0; t + 1 < gs.size(); t += 2) {
            std::size_t i = gs[t], j = gs[t + 1];
            // columns i,j of M replaced by the rotated pair
            for (std::size_t r = 0; r < n; ++r) {
                Felt mi = M.at(r, i), mj = M.at(r, j);
                M.at(r, i) = F.add(F.mul(p1, mi), F.mul(p2, mj));
                M.at(r, j) = F.add(F.mul(F.neg(p2), mi), F.mul(p1, mj));
            }
            A.at(i, i) = 1;
            A.at(j, j) = 1;
        }
    }

    // Move the leftover gamma (if any) to the last slot.
    if (gs.size() % 2 == 1) {
        std::size_t g = gs.back();
        if (g != n - 1) col_swap(A, M, g, n - 1);
    }
    verify_congruence(B, M, A, "odd normal form congruence failed");
    return M;
}

Mat gram_of(const BilinearForm& B, const std::vector<Vec>& basis) {
    Mat G(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            Felt v = eval_form(B, basis[i], basis[j]);
            G.at(i, j) = v;
            G.at(j, i) = v;
        }
    return G;
}

// Replace basis C by a basis of span(C) ∩ {u ⊥ each of pins} (Gram-side).
std::vector<Vec> cut_basis(const BilinearForm& B, const std::vector<Vec>& C,
                           const std::vector<Vec>& pins) {
    const Field& F = *B.F;
    Mat constraints(pins.size(), C.size());
    for (std::size_t r = 0; r < pins.size(); ++r)
        for (std::size_t j = 0; j < C.size(); ++j)
            constraints.at(r, j) = eval_form(B, pins[r], C[j]);
    std::vector<Vec> combos = kernel_basis(F, constraints);
    std::vector<Vec> out;
    for (const Vec& k : combos) {
        Vec v(B.A.rows, 0);
        for (std::size_t j = 0; j < C.size(); ++j)
            if (k[j]) v = vec_add(F, v, scalar_mul(F, k[j], C[j]));
        out.push_back(std::move(v));
    }
    return out;
}

// Alternating, non-degenerate on span(C): returns vectors e1,f1,e2,f2,...
std::vector<Vec> symplectic_basis(const BilinearForm& B, std::vector<Vec> C) {
    const Field& F = *B.F;
    std::vector<Vec> out;
    while (!C.empty()) {
        require(C.size() >= 2, "InvariantViolation",
                "odd-dimensional alternating block");
        Vec e = C[0];
        std::size_t j = 1;
        while (j < C.size() && eval_form(B, e, C[j]) == 0) ++j;
        require(j < C.size(), "InvariantViolation",
                "degenerate alternating block");
        Vec f = scalar_mul(F, F.inv(eval_form(B, e, C[j])), C[j]);
        out.push_back(e);
        out.push_back(f);
        C = cut_basis(B, C, {e, f});
    }
    return out;
}

// GF(2), non-degenerate: returns P with P^T A P equal to the canonical
// matrix of the form's class (I_n for dot, H + ... + H for hyperbolic).
Mat to_normal_binary(const BilinearForm& B, Kind kind) {
    const Field& F = *B.F;
    const std::size_t n = B.A.rows;
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        basis.push_back(std::move(e));
    }

    std::vector<Vec> cols;
    if (kind == Kind::hyperbolic) {
        cols = symplectic_basis(B, basis);
    } else {
        // Build an orthonormal basis.  If the remainder turns alternating,
        // absorb each hyperbolic pair (e,f) into the last orthonormal vector
        // u via the orthonormal triple {u+e, u+f, u+e+f}.
        std::vector<Vec> W;
        std::vector<Vec> C = basis;
        while (!C.empty()) {
            Mat G = gram_of(B, C);
            std::size_t idx = C.size();
            for (std::size_t i = 0; i < C.size(); ++i)
                if (G.at(i, i) == 1) {
                    idx = i;
                    break;
                }
            if (idx < C.size()) {
                Vec w = C[idx];
                W.push_back(w);
                C = cut_basis(B, C, {w});
            } else {
                std::vector<Vec> pairs = symplectic_basis(B, C);
                require(!W.empty(), "InvariantViolation",
                        "dot-class form reduced to a purely alternating block");
                for (std::size_t t = 0; t + 1 < pairs.size(); t += 2) {
                    Vec u = W.back();
                    W.pop_back();
                    const Vec& e = pairs[t];
                    const Vec& f = pairs[t + 1];
                    W.push_back(vec_add(F, u, e));
                    W.push_back(vec_add(F, u, f));
                    W.push_back(vec_add(F, vec_add(F, u, e), f));
                }
                C.clear();
            }
        }
        cols = std::move(W);
    }
    require(cols.size() == n, "InvariantViolation", "normal basis wrong size");
    Mat M(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) M.at(i, j) = cols[j][i];
    verify_congruence(B, M, canonical_matrix(F, static_cast<std::uint32_t>(n), kind),
                      "binary normal form congruence failed");
    return M;
}

Mat core_witness(const BilinearForm& A, const BilinearForm& B, const FormClass& cls) {
    const Field& F = *A.F;
    Mat PA, PB;
    if (F.odd()) {
        PA = to_normal_odd(A);
        PB = to_normal_odd(B);
    } else {
        PA = to_normal_binary(A, cls.kind);
        PB = to_normal_binary(B, cls.kind);
    }
    return mat_mul(F, PB, inverse(F, PA));
}

}  // namespace

Mat equivalence_witness(const BilinearForm& A, const BilinearForm& B) {
    require(static_cast<bool>(A.F) && static_cast<bool>(B.F), "BadParams",
            "forms need fields");
    require(*A.F == *B.F, "MixedFields", "forms live over different fields");
    require(A.A.rows == B.A.rows, "ShapeMismatch", "dimension mismatch");
    const Field& F = *A.F;
    FormClass ca = classify(A), cb = classify(B);
    require(ca == cb, "NotEquivalent",
            "invariants differ: " + ca.label() + " rank " +
                std::to_string(ca.rank) + " vs " + cb.label() + " rank " +
                std::to_string(cb.rank));

    Mat M;
    if (ca.rank == ca.n) {
        M = core_witness(A, B, ca);
    } else {
        // Split off the radical on both sides, witness the non-degenerate
        // parts, and map radical to radical.
        auto split = [&F](const BilinearForm& X) {
            const std::size_t n = X.A.rows;
            std::vector<Vec> radical = kernel_basis(F, X.A);
            std::vector<Vec> complement;
            std::vector<Vec> pool = radical;
            for (std::size_t i = 0; i < n && pool.size() < n; ++i) {
                Vec e(n, 0);
                e[i] = 1;
                if (!in_span(F, pool, e)) {
                    pool.push_back(e);
                    complement.push_back(e);
                }
            }
            return std::pair(complement, radical);
        };
        auto [WA, KA] = split(A);
        auto [WB, KB] = split(B);
        BilinearForm Acore = make_form(A.F, gram_of(A, WA));
        BilinearForm Bcore = make_form(B.F, gram_of(B, WB));
        // May throw NotEquivalent: the rank/epsilon invariant of FormClass
        // cannot separate all degenerate pairs, but the cores can.
        FormClass core_cls = classify(Acore);
        FormClass core_cls_b = classify(Bcore);
        require(core_cls == core_cls_b, "NotEquivalent",
                "non-degenerate parts differ: " + core_cls.label() + " vs " +
                    core_cls_b.label());
        Mat Mcore = core_witness(Acore, Bcore, core_cls);

        const std::size_t n = A.A.rows, r = WA.size();
        auto pack = [n](const std::vector<Vec>& W, const std::vector<Vec>& K) {
            Mat P(n, n);
            for (std::size_t j = 0; j < W.size(); ++j)
                for (std::size_t i = 0; i < n; ++i) P.at(i, j) = W[j][i];
            for (std::size_t j = 0; j < K.size(); ++j)
                for (std::size_t i = 0; i < n; ++i)
                    P.at(i, W.size() + j) = K[j][i];
            return P;
        };
        Mat PA = pack(WA, KA), PB = pack(WB, KB);
        Mat Q = direct_sum(Mcore, Mat::identity(n - r));
        M = mat_mul(F, mat_mul(F, PB, Q), inverse(F, PA));
    }
    verify_congruence(B, M, A.A, "equivalence witness failed to verify");
    return M;
}

std::vector<Vec> orthogonal_complement(const BilinearForm& B,
                                       const std::vector<Vec>& X) {
    const Field& F = *B.F;
    const std::size_t n = B.A.rows;
    Mat constraints(X.size(), n);
    for (std::size_t r = 0; r < X.size(); ++r) {
        require(X[r].size() == n, "ShapeMismatch", "complement vector dimension");
        Vec row = mat_vec(F, B.A, X[r]);  // B(x, .) as a linear functional
        for (std::size_t j = 0; j < n; ++j) constraints.at(r, j) = row[j];
    }
    if (X.empty()) {
        constraints = Mat(1, n);  // zero row: kernel is everything
    }
    return kernel_basis(F, constraints);
}

RestrictResult restrict_to_complement(const BilinearForm& B, const Vec& v,
                                      const Vec& w) {
    const Field& F = *B.F;
    require(v.size() == B.A.rows && w.size() == B.A.rows, "ShapeMismatch",
            "restriction vectors have wrong dimension");
    require(span_basis(F, {v, w}).size() == 2, "LinearlyDependent",
            "restriction requires independent v, w");

    RestrictResult out;
    out.basis = orthogonal_complement(B, {v, w});
    out.restricted = make_form(B.F, gram_of(B, out.basis));

    Felt a = eval_form(B, v, v);
    Felt b = eval_form(B, v, w);
    Felt c = eval_form(B, w, w);
    out.hypothesis_holds = (F.mul(b, b) != F.mul(a, c));
    out.degenerate = is_degenerate(out.restricted);
    if (F.odd() || F.q == 2) {
        out.cls = classify(out.restricted);
        out.classified = true;
    }

    if (!is_degenerate(B)) {
        if (out.hypothesis_holds) {
            require(out.basis.size() == B.A.rows - 2, "InvariantViolation",
                    "dimension must drop by exactly 2 under the hypothesis");
            require(!out.degenerate, "InvariantViolation",
                    "restriction must be non-degenerate under the hypothesis");
        }
        if (F.odd() && b != 0 && c == 0) {
            require(epsilon(out.restricted) == epsilon(B), "InvariantViolation",
                    "epsilon not preserved by the restriction");
        }
        if (F.q == 2 && B.A.rows % 2 == 0 && a == 0 && c == 0 && b == 1) {
            require((classify(B).kind == Kind::hyperbolic) ==
                        (out.cls.kind == Kind::hyperbolic),
                    "InvariantViolation",
                    "binary type not preserved by the restriction");
        }
    }
    return out;
}

std::optional<Vec> find_isotropic(const BilinearForm& B) {
    const Field& F = *B.F;
    require(!is_degenerate(B), "Degenerate",
            "isotropic search requires a non-degenerate form");
    const std::size_t n = B.A.rows;
    if (n == 0) return std::nullopt;

    // Exhaustive scan in encoding order when the space is small.
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < n; ++i) {
        total *= F.q;
        if (total > 1000000ULL) {
            small = false;
            break;
        }
    }
    if (small) {
        for (std::uint64_t idx = 1; idx < total; ++idx) {
            Vec v = decode_vec(F, idx, n);
            if (eval_form(B, v, v) == 0) return v;
        }
        return std::nullopt;
    }

    if (!F.odd()) {
        // Characteristic 2: B(x,x) is additive in x; every element a square.
        for (std::size_t i = 0; i < n; ++i)
            if (B.A.at(i, i) == 0) {
                Vec v(n, 0);
                v[i] = 1;
                return v;
            }
        if (n == 1) return std::nullopt;
        // v = e_0 + t e_1 with t^2 = A_00 / A_11.
        Felt ratio = F.mul(B.A.at(0, 0), F.inv(B.A.at(1, 1)));
        auto t = sqrt_element(F, ratio);
        require(t.has_value(), "InvariantViolation",
                "square root must exist in characteristic 2");
        Vec v(n, 0);
        v[0] = 1;
        v[1] = *t;
        return v;
    }

    DiagResult dg = diagonalize(B);
    auto column = [&](std::size_t j) {
        Vec c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = dg.M.at(i, j);
        return c;
    };
    Felt d0 = dg.D.at(0, 0), d1 = dg.D.at(1, 1);
    if (n == 1) return std::nullopt;
    if (n == 2) {
        // d0 x^2 + d1 = 0  <=>  x^2 = -d1/d0
        auto x = sqrt_element(F, F.neg(F.mul(d1, F.inv(d0))));
        if (!x) return std::nullopt;
        Vec v = vec_add(F, scalar_mul(F, *x, column(0)), column(1));
        require(eval_form(B, v, v) == 0, "InvariantViolation", "bad isotropic");
        return v;
    }
    // Solve d0 x^2 + d1 y^2 = -d2; a binary non-degenerate diagonal form
    // represents every nonzero value over a finite field.
    Felt d2 = dg.D.at(2, 2);
    for (Felt x = 0; x < F.q; ++x) {
        Felt rem = F.sub(F.neg(d2), F.mul(d0, F.mul(x, x)));
        auto y = sqrt_element(F, F.mul(rem, F.inv(d1)));
        if (y) {
            Vec v = vec_add(F, scalar_mul(F, x, column(0)),
                            vec_add(F, scalar_mul(F, *y, column(1)), column(2)));
            require(eval_form(B, v, v) == 0, "InvariantViolation",
                    "bad isotropic");
            return v;
        }
    }
    fail("InvariantViolation", "ternary isotropic solve found nothing");
}

std::uint32_t witt_index(const BilinearForm& B) {
    const Field& F = *B.F;
    require(!is_degenerate(B), "Degenerate",
            "Witt index requires a non-degenerate form");
    const std::size_t n = B.A.rows;
    std::vector<Vec> C;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        C.push_back(std::move(e));
    }
    std::uint32_t w = 0;
    while (!C.empty()) {
        BilinearForm sub = make_form(B.F, gram_of(B, C));
        auto iso = find_isotropic(sub);
        if (!iso) break;
        // Lift the coordinate vector back to the ambient space.
        Vec e(n, 0);
        for (std::size_t j = 0; j < C.size(); ++j)
            if ((*iso)[j]) e = vec_add(F, e, scalar_mul(F, (*iso)[j], C[j]));
        std::size_t jf = C.size();
        for (std::size_t j = 0; j < C.size(); ++j)
            if (eval_form(B, e, C[j]) != 0) {
                jf = j;
                break;
            }
        require(jf < C.size(), "InvariantViolation",
                "isotropic vector has no partner in a non-degenerate space");
        Vec f = C[jf];
        ++w;
        C = cut_basis(B, C, {e, f});
    }
    return w;
}

std::uint32_t d_n_formula(std::uint32_t q, std::uint32_t n, Kind cls) {
    require(n >= 1, "BadClass", "dimension must be at least 1");
    if (q % 2 == 1) {
        require(cls == Kind::one || cls == Kind::gamma, "BadClass",
                "odd-q classes are 'one' and 'gamma'");
        if (n % 2 == 1) return (n - 1) / 2;
        return cls == Kind::one ? n / 2 : n / 2 - 1;
    }
    require(q == 2, "EvenField", "binary classes apply to q = 2 only");
    if (cls == Kind::hyperbolic) {
        require(n % 2 == 0, "BadClass", "hyperbolic class needs even n");
        return n / 2;
    }
    require(cls == Kind::dot, "BadClass",
            "binary classes are 'dot' and 'hyperbolic'");
    // Witt-index convention: a 1-dimensional space has no nonzero isotropic
    // vector under the dot product (B(e1,e1)=1), so the value at n=1 is 0.
    if (n == 1) return 0;
    return n / 2;
}

}  // namespace ortholab
