#pragma once

#include "ortholab/forms.hpp"
#include "ortholab/graphs.hpp"

namespace ortholab {

// A set of pairwise distinct, nonzero vectors with an ambient form.
struct OrthoSet {
    BilinearForm B;
    std::vector<Vec> vectors;

    std::size_t size() const { return vectors.size(); }
    std::size_t dim() const { return B.A.rows; }
};

// Validates distinctness, nonzeroness, dimensions.  Errors: ZeroVector,
// Duplicate, ShapeMismatch, Overflow.
OrthoSet make_set(BilinearForm B, std::vector<Vec> vectors);

bool is_orthogonal_set(const OrthoSet& S);

struct KlReport {
    bool holds = false;
    std::vector<int> witness;  // a violating k-subset (empty when holds)
    unsigned long long examined = 0;
};

// Every k-subset contains l pairwise mutually orthogonal elements.
// l = 2 fast path: no K_k in the non-orthogonality graph.  General (k,l)
// enumerates k-subsets; BudgetExceeded carries the partial count.
KlReport is_kl_report(const OrthoSet& S, int k, int l,
                      unsigned long long budget = 50'000'000ULL);
bool is_kl_orthogonal(const OrthoSet& S, int k, int l,
                      unsigned long long budget = 50'000'000ULL);

// Vertex i ~ j iff B(v_i, v_j) != 0; vertex order = input order.
Graph nonorth_graph(const OrthoSet& S);

struct StructDecomp {
    std::vector<Vec> V_basis;  // basis of span(S minus T), totally isotropic
    std::vector<Vec> T;        // the non-self-orthogonal members
    std::vector<int> T_idx;
    std::size_t dimV = 0;
};

// Requires an orthogonal set over a non-degenerate form; re-verifies the
// guarantees (totally isotropic span, 2*dim(V) + |T| <= n) before returning.
// Errors: NotOrthogonal, Degenerate, InvariantViolation.
StructDecomp struct_decompose(const OrthoSet& S);

struct NeighborhoodDecomp {
    Vec s;
    std::vector<Vec> S_s;       // members of S\{s} not orthogonal to s
    std::vector<Vec> R_s;       // self-orthogonal part of S_s
    std::vector<Vec> T_s;       // non-self-orthogonal part of S_s
    std::vector<Vec> V_s_basis; // basis of span(R_s)
    std::size_t k_s = 0;        // dim V_s
};

// Requires s in S, S (3,2)-orthogonal, B non-degenerate; verifies that S_s is
// an orthogonal set when it has >= 2 members and that span(R_s) is totally
// isotropic.  Errors: NotMember, Not32Orthogonal, Degenerate,
// InvariantViolation.
NeighborhoodDecomp neighborhood_decompose(const OrthoSet& S, const Vec& s);

// Adds every scalar multiple of each self-orthogonal member whose addition
// keeps the set (3,2)-orthogonal; deterministic and idempotent.
OrthoSet line_closure(const OrthoSet& S);

// Is any nonzero vector addable while keeping the set (3,2)-orthogonal?
bool is_maximal_32(const OrthoSet& S);

enum class BoundKind {
    s22,         // largest orthogonal set, odd q
    s22_binary,  // largest orthogonal set, q = 2 dot (stated closed form)
    s32_odd_q,   // largest (3,2) set, odd q >= 7
    s32_binary,  // largest (3,2) set, q = 2 (stated ranges n >= 21 / 18 / 2)
    k2_bound,    // (k,2) upper bound, floor of the rational expression
    am_32,       // 3 q^{floor(n/2)} upper bound, odd q
    d_bound,     // max size of an all-non-self-orthogonal (3,2) set
    ahmmoh_lb,   // prior lower bounds (odd q four cases; q = 2 two cases)
    weak_binary, // unconditional q = 2 upper bound (four cases)
    sv_binary    // per-vertex neighborhood bound table, q = 2
};

BoundKind bound_kind_from_label(const std::string& s);
std::string bound_kind_label(BoundKind k);

struct BoundValue {
    long long value = 0;
    bool in_range = true;  // false = outside stated hypotheses (still printed)
};

// Exact closed-form values; `k` only matters for k2_bound.  Errors: BadClass,
// BadParams, Overflow; out-of-hypothesis queries return in_range = false.
BoundValue bound_formulas(std::uint32_t q, std::uint32_t n, Kind cls,
                          BoundKind kind, std::uint32_t k = 0);

// Maximal-by-inclusion (3,2)-orthogonal set by seeded random greedy insertion
// over the canonical form of the class; deterministic per seed.
OrthoSet random_greedy_32(std::uint32_t q, std::uint32_t n, Kind cls,
                          std::uint64_t seed);

}  // namespace ortholab
