#include "ortholab/orthosets.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ortholab/detrand.hpp"
#include "ortholab/errors.hpp"

namespace ortholab {

namespace {

// Would adding w keep the non-orthogonality graph of `cur` (plus w) free of
// triangles?  Only triangles through w can appear.
bool keeps_32(const BilinearForm& B, const std::vector<Vec>& cur, const Vec& w) {
    std::vector<std::size_t> nb;
    for (std::size_t i = 0; i < cur.size(); ++i) {
        if (eval_form(B, w, cur[i]) != 0) nb.push_back(i);
    }
    for (std::size_t a = 0; a < nb.size(); ++a) {
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
            if (eval_form(B, cur[nb[a]], cur[nb[b]]) != 0) return false;
        }
    }
    return true;
}

long long ipow_ll(std::uint32_t base, std::uint32_t e) {
    long long r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        require(r <= 400'000'000'000'000'000LL / static_cast<long long>(base),
                "Overflow", "power too large for exact bound evaluation");
        r *= static_cast<long long>(base);
    }
    return r;
}

void require_pm_class(Kind cls) {
    require(cls == Kind::one || cls == Kind::gamma, "BadClass",
            "this bound is indexed by a discriminant class (one/gamma)");
}

void require_binary_class(Kind cls) {
    require(cls == Kind::dot || cls == Kind::hyperbolic, "BadClass",
            "this bound is indexed by a characteristic-2 class "
            "(dot/hyperbolic)");
}

}  // namespace

OrthoSet make_set(BilinearForm B, std::vector<Vec> vectors) {
    const Field& F = *B.F;
    require(B.A.square(), "ShapeMismatch", "form matrix must be square");
    const std::size_t n = B.A.rows;
    std::set<Vec> seen;
    for (const Vec& v : vectors) {
        require(v.size() == n, "ShapeMismatch",
                "vector length does not match the form dimension");
        for (Felt c : v) F.check_element(c);
        require(!is_zero_vec(v), "ZeroVector",
                "sets contain nonzero vectors only");
        require(seen.insert(v).second, "Duplicate",
                "sets contain pairwise distinct vectors");
    }
    return OrthoSet{std::move(B), std::move(vectors)};
}

bool is_orthogonal_set(const OrthoSet& S) {
    for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            if (eval_form(S.B, S.vectors[i], S.vectors[j]) != 0) return false;
        }
    }
    return true;
}

Graph nonorth_graph(const OrthoSet& S) {
    Graph G(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            if (eval_form(S.B, S.vectors[i], S.vectors[j]) != 0) {
                G.add_edge(i, j);
            }
        }
    }
    return G;
}

namespace {

// Does the current k-subset contain l pairwise mutually orthogonal
// elements?  `orth[a][b]` indexes within the subset.
bool orth_subset_dfs(const std::vector<std::vector<bool>>& orth, int k, int l,
                     std::vector<int>& chosen, int start) {
    if (static_cast<int>(chosen.size()) >= l) return true;
    if (k - start < l - static_cast<int>(chosen.size())) return false;
    for (int cand = start; cand < k; ++cand) {
        bool ok = true;
        for (int c : chosen) {
            if (!orth[c][cand]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(cand);
        if (orth_subset_dfs(orth, k, l, chosen, cand + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

bool has_orth_l_subset(const std::vector<std::vector<bool>>& orth, int k,
                       int l) {
    std::vector<int> chosen;
    return orth_subset_dfs(orth, k, l, chosen, 0);
}

}  // namespace

KlReport is_kl_report(const OrthoSet& S, int k, int l,
                      unsigned long long budget) {
    require(l >= 2 && k >= l, "BadParams", "need 2 <= l <= k");
    KlReport rep;
    const std::size_t N = S.size();
    if (static_cast<std::size_t>(k) > N) {
        rep.holds = true;  // no k-subsets at all
        return rep;
    }
    Graph G = nonorth_graph(S);
    if (l == 2) {
        // l = 2: a bad k-subset is exactly a K_k in the non-orthogonality
        // graph (no two of its members orthogonal).
        std::vector<int> clique = find_clique(G, k);
        rep.holds = clique.empty();
        rep.witness = std::move(clique);
        return rep;
    }
    // General case: enumerate k-subsets in lexicographic order.  Refuse up
    // front if there are more of them than the budget allows.
    unsigned long long combos = 1;
    for (int i = 0; i < k; ++i) {
        // combos = C(N, i+1) incrementally: C(N,i+1) = C(N,i)*(N-i)/(i+1)
        unsigned long long next = combos * (N - static_cast<std::size_t>(i));
        require(next / (N - static_cast<std::size_t>(i)) == combos, "BudgetExceeded",
                "number of k-subsets overflows; examined 0");
        combos = next / static_cast<unsigned long long>(i + 1);
    }
    require(combos <= budget, "BudgetExceeded",
            "C(|S|,k) = " + std::to_string(combos) + " exceeds budget " +
                std::to_string(budget) + "; examined 0 subsets");
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<bool>> orth(k, std::vector<bool>(k, false));
    while (true) {
        ++rep.examined;
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                orth[a][b] = (a != b) && !G.edge(idx[a], idx[b]);
            }
        }
        if (!has_orth_l_subset(orth, k, l)) {
            rep.holds = false;
            rep.witness = idx;
            return rep;
        }
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == static_cast<int>(N) - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    rep.holds = true;
    return rep;
}

bool is_kl_orthogonal(const OrthoSet& S, int k, int l,
                      unsigned long long budget) {
    return is_kl_report(S, k, l, budget).holds;
}

StructDecomp struct_decompose(const OrthoSet& S) {
    require(!is_degenerate(S.B), "Degenerate",
            "decomposition needs a non-degenerate form");
    require(is_orthogonal_set(S), "NotOrthogonal",
            "decomposition needs an orthogonal set");
    const Field& F = *S.B.F;
    const std::size_t n = S.dim();
    StructDecomp d;
    std::vector<Vec> iso;
    for (std::size_t i = 0; i < S.size(); ++i) {
        const Vec& v = S.vectors[i];
        if (eval_form(S.B, v, v) != 0) {
            d.T.push_back(v);
            d.T_idx.push_back(static_cast<int>(i));
        } else {
            iso.push_back(v);
        }
    }
    d.V_basis = span_basis(F, iso);
    d.dimV = d.V_basis.size();
    for (std::size_t i = 0; i < d.V_basis.size(); ++i) {
        for (std::size_t j = i; j < d.V_basis.size(); ++j) {
            require(eval_form(S.B, d.V_basis[i], d.V_basis[j]) == 0,
                    "InvariantViolation",
                    "span of the self-orthogonal part is not totally "
                    "isotropic");
        }
    }
    require(2 * d.dimV + d.T.size() <= n, "InvariantViolation",
            "2 dim(V) + |T| exceeds the ambient dimension");
    return d;
}

NeighborhoodDecomp neighborhood_decompose(const OrthoSet& S, const Vec& s) {
    require(!is_degenerate(S.B), "Degenerate",
            "decomposition needs a non-degenerate form");
    auto it = std::find(S.vectors.begin(), S.vectors.end(), s);
    require(it != S.vectors.end(), "NotMember",
            "the pivot vector must belong to the set");
    require(is_triangle_free(nonorth_graph(S)), "Not32Orthogonal",
            "the set must be (3,2)-orthogonal");
    const Field& F = *S.B.F;
    NeighborhoodDecomp d;
    d.s = s;
    for (const Vec& v : S.vectors) {
        if (v == s) continue;
        if (eval_form(S.B, v, s) == 0) continue;
        d.S_s.push_back(v);
        if (eval_form(S.B, v, v) == 0) {
            d.R_s.push_back(v);
        } else {
            d.T_s.push_back(v);
        }
    }
    if (d.S_s.size() >= 2) {
        for (std::size_t i = 0; i < d.S_s.size(); ++i) {
            for (std::size_t j = i + 1; j < d.S_s.size(); ++j) {
                require(eval_form(S.B, d.S_s[i], d.S_s[j]) == 0,
                        "InvariantViolation",
                        "common neighbors of a (3,2)-set pivot must be "
                        "pairwise orthogonal");
            }
        }
    }
    d.V_s_basis = span_basis(F, d.R_s);
    d.k_s = d.V_s_basis.size();
    for (std::size_t i = 0; i < d.V_s_basis.size(); ++i) {
        for (std::size_t j = i; j < d.V_s_basis.size(); ++j) {
            require(eval_form(S.B, d.V_s_basis[i], d.V_s_basis[j]) == 0,
                    "InvariantViolation",
                    "span of the isotropic neighbors is not totally "
                    "isotropic");
        }
    }
    return d;
}

OrthoSet line_closure(const OrthoSet& S) {
    const Field& F = *S.B.F;
    std::vector<Vec> out = S.vectors;
    std::set<Vec> present(out.begin(), out.end());
    const std::size_t original = out.size();
    for (std::size_t i = 0; i < original; ++i) {
        if (eval_form(S.B, out[i], out[i]) != 0) continue;  // not on its line
        for (Felt lam = 2; lam < F.q; ++lam) {
            Vec w = scalar_mul(F, lam, out[i]);
            if (present.count(w)) continue;
            if (keeps_32(S.B, out, w)) {
                present.insert(w);
                out.push_back(w);
            }
        }
    }
    return OrthoSet{S.B, std::move(out)};
}

bool is_maximal_32(const OrthoSet& S) {
    const Field& F = *S.B.F;
    const std::size_t n = S.dim();
    unsigned long long total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= F.q;
        require(total <= 10'000'000ULL, "TooLarge",
                "maximality scan needs q^n <= 1e7");
    }
    std::set<Vec> present(S.vectors.begin(), S.vectors.end());
    for (unsigned long long idx = 1; idx < total; ++idx) {
        Vec w = decode_vec(F, idx, n);
        if (present.count(w)) continue;
        if (keeps_32(S.B, S.vectors, w)) return false;
    }
    return true;
}

BoundKind bound_kind_from_label(const std::string& s) {
    if (s == "s22") return BoundKind::s22;
    if (s == "s22_binary") return BoundKind::s22_binary;
    if (s == "s32_odd_q") return BoundKind::s32_odd_q;
    if (s == "s32_binary") return BoundKind::s32_binary;
    if (s == "k2_bound") return BoundKind::k2_bound;
    if (s == "am_32") return BoundKind::am_32;
    if (s == "d_bound") return BoundKind::d_bound;
    if (s == "ahmmoh_lb") return BoundKind::ahmmoh_lb;
    if (s == "weak_binary") return BoundKind::weak_binary;
    if (s == "sv_binary") return BoundKind::sv_binary;
    fail("BadParams", "unknown bound kind: " + s);
}

std::string bound_kind_label(BoundKind k) {
    switch (k) {
        case BoundKind::s22: return "s22";
        case BoundKind::s22_binary: return "s22_binary";
        case BoundKind::s32_odd_q: return "s32_odd_q";
        case BoundKind::s32_binary: return "s32_binary";
        case BoundKind::k2_bound: return "k2_bound";
        case BoundKind::am_32: return "am_32";
        case BoundKind::d_bound: return "d_bound";
        case BoundKind::ahmmoh_lb: return "ahmmoh_lb";
        case BoundKind::weak_binary: return "weak_binary";
        case BoundKind::sv_binary: return "sv_binary";
    }
    fail("BadParams", "unknown bound kind");
}

namespace {

// floor(a * (q^{n/2} + 1) / c) computed exactly; q^{n/2} is irrational for
// odd n, handled by a squared comparison.
long long floor_k2(std::uint32_t q, std::uint32_t n, long long a,
                   long long c) {
    long long qn = ipow_ll(q, n);
    require(qn <= 1'000'000'000'000LL, "Overflow",
            "k2_bound evaluation needs q^n <= 1e12");
    using u128 = unsigned __int128;
    if (n % 2 == 0) {
        long long Q = ipow_ll(q, n / 2);
        u128 num = static_cast<u128>(a) * static_cast<u128>(Q + 1);
        return static_cast<long long>(num / static_cast<u128>(c));
    }
    long long s = ipow_ll(q, (n - 1) / 2);
    // Largest t with t*c <= a*(s*sqrt(q) + 1), i.e. with
    // (t*c - a) <= a*s*sqrt(q); square both sides when t*c > a.
    u128 rhs = static_cast<u128>(a) * static_cast<u128>(a) *
               static_cast<u128>(qn);  // (a*s)^2 * q = a^2 * q^n
    auto pred = [&](long long t) {
        u128 tc = static_cast<u128>(t) * static_cast<u128>(c);
        if (tc <= static_cast<u128>(a)) return true;
        u128 d = tc - static_cast<u128>(a);
        return d * d <= rhs;
    };
    long long lo = 0;
    long long hi = (a * (s * static_cast<long long>(q) + 1)) / c + 2;
    while (lo < hi) {  // invariant: pred(lo), !pred(hi)
        long long mid = lo + (hi - lo + 1) / 2;
        if (pred(mid)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace

BoundValue bound_formulas(std::uint32_t q, std::uint32_t n, Kind cls,
                          BoundKind kind, std::uint32_t k) {
    require(q >= 2, "BadParams", "need q >= 2");
    const bool odd_q = (q % 2 == 1);
    if (kind != BoundKind::d_bound) {
        require(n >= 1, "BadParams", "need n >= 1");
    }
    BoundValue out;
    switch (kind) {
        case BoundKind::s22: {
            require_pm_class(cls);
            if (n % 2 == 1) {
                out.value = ipow_ll(q, (n - 1) / 2);
            } else if (cls == Kind::one) {
                out.value = ipow_ll(q, n / 2) - 1;
            } else {
                out.value = ipow_ll(q, n / 2 - 1) + 1;
            }
            out.in_range = odd_q;
            return out;
        }
        case BoundKind::s22_binary: {
            require(cls == Kind::dot, "BadClass",
                    "this closed form is stated for the dot product");
            if (n <= 5) {
                out.value = n;
            } else if (n % 2 == 1) {
                out.value = 1 + ipow_ll(2, (n - 1) / 2);
            } else {
                out.value = ipow_ll(2, n / 2);
            }
            out.in_range = (q == 2);
            return out;
        }
        case BoundKind::s32_odd_q: {
            require_pm_class(cls);
            if (n % 2 == 1) {
                out.value = 2 * ipow_ll(q, (n - 1) / 2) + 1;
            } else if (cls == Kind::one) {
                out.value = 2 * ipow_ll(q, n / 2) - 2;
            } else if (n == 2) {
                out.value = 4;
            } else {
                out.value = 2 * ipow_ll(q, n / 2 - 1) + 4;
            }
            out.in_range = odd_q && q >= 7;
            return out;
        }
        case BoundKind::s32_binary: {
            require_binary_class(cls);
            if (cls == Kind::dot) {
                if (n % 2 == 1) {
                    out.value = ipow_ll(2, (n + 1) / 2) + 1;
                    out.in_range = (q == 2) && n >= 21;
                } else {
                    out.value = ipow_ll(2, n / 2 + 1) - 3;
                    out.in_range = (q == 2) && n >= 18;
                }
            } else {
                require(n % 2 == 0, "BadClass",
                        "the alternating class needs even dimension");
                out.value = ipow_ll(2, n / 2 + 1) - 2;
                out.in_range = (q == 2);
            }
            return out;
        }
        case BoundKind::k2_bound: {
            require(k >= 2, "BadParams", "k2_bound needs k >= 2");
            require(q >= k, "BadParams",
                    "k2_bound needs q - k + 1 positive");
            const long long a =
                static_cast<long long>(k - 1) * static_cast<long long>(q);
            const long long c =
                static_cast<long long>(q) - static_cast<long long>(k) + 1;
            out.value = floor_k2(q, n, a, c);
            out.in_range = odd_q;
            return out;
        }
        case BoundKind::am_32: {
            out.value = 3 * ipow_ll(q, n / 2);
            out.in_range = odd_q;
            return out;
        }
        case BoundKind::d_bound: {
            const long long nn = n;
            out.value = (nn <= 4) ? 2 * nn : nn * (nn + 1) / 2 - 1;
            out.in_range = true;
            return out;
        }
        case BoundKind::ahmmoh_lb: {
            if (cls == Kind::one || cls == Kind::gamma) {
                if (n % 2 == 1) {
                    out.value = (cls == Kind::one)
                                    ? 2 * ipow_ll(q, (n - 1) / 2)
                                    : 2 * ipow_ll(q, (n - 1) / 2) - q + 1;
                } else {
                    out.value = (cls == Kind::one)
                                    ? 2 * ipow_ll(q, n / 2) - q - 1
                                    : 2 * ipow_ll(q, n / 2 - 1) + 2;
                }
                out.in_range = odd_q;
            } else if (cls == Kind::dot) {
                out.value = (n % 2 == 1) ? ipow_ll(2, (n + 1) / 2)
                                         : ipow_ll(2, n / 2 + 1) - 3;
                out.in_range = (q == 2);
            } else {
                fail("BadClass",
                     "no stated lower bound for the alternating class");
            }
            return out;
        }
        case BoundKind::weak_binary: {
            require_binary_class(cls);
            if (cls == Kind::hyperbolic) {
                require(n % 2 == 0, "BadClass",
                        "the alternating class needs even dimension");
            }
            const long long nn = n;
            if (n == 1 || n == 3) {
                out.value = ipow_ll(2, (n + 1) / 2) + 2 * nn - 2;
            } else if (n % 2 == 1) {
                out.value = ipow_ll(2, (n + 1) / 2) + nn * (nn + 1) / 2 - 3;
            } else if (n == 2 || n == 4) {
                out.value = ipow_ll(2, n / 2 + 1) + 2 * nn - 3;
            } else {
                out.value = ipow_ll(2, n / 2 + 1) + nn * (nn + 1) / 2 - 4;
            }
            out.in_range = (q == 2);
            return out;
        }
        case BoundKind::sv_binary: {
            require_binary_class(cls);
            if (cls == Kind::dot) {
                if (n <= 7) {
                    out.value = n;
                } else if (n % 2 == 1) {
                    out.value = 1 + ipow_ll(2, (n - 1) / 2 - 1);
                } else {
                    out.value = ipow_ll(2, n / 2 - 1);
                }
            } else {
                require(n % 2 == 0, "BadClass",
                        "the alternating class needs even dimension");
                out.value = ipow_ll(2, n / 2 - 1);
            }
            out.in_range = (q == 2);
            return out;
        }
    }
    fail("BadParams", "unknown bound kind");
}

OrthoSet random_greedy_32(std::uint32_t q, std::uint32_t n, Kind cls,
                          std::uint64_t seed) {
    FieldPtr F = field_from_order(q);
    BilinearForm B = canonical_form(F, n, cls);
    unsigned long long total = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        total *= q;
        require(total <= 1'000'000ULL, "TooLarge",
                "greedy generation needs q^n <= 1e6");
    }
    std::vector<Vec> pool;
    pool.reserve(total - 1);
    for (unsigned long long idx = 1; idx < total; ++idx) {
        pool.push_back(decode_vec(*F, idx, n));
    }
    DetRand rng(seed);
    rng.shuffle(pool);
    std::vector<Vec> chosen;
    for (const Vec& w : pool) {
        if (keeps_32(B, chosen, w)) chosen.push_back(w);
    }
    return make_set(std::move(B), std::move(chosen));
}

}  // namespace ortholab
