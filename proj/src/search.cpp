#include "ortholab/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>

#include "ortholab/constructions.hpp"
#include "ortholab/errors.hpp"

namespace ortholab {

namespace {

constexpr int kMaxKfreeVertices = 1024;

using Mask = std::vector<std::uint64_t>;

Mask suffix_mask(int n, int words, int from) {
    Mask m(words, 0);
    for (int v = from; v < n; ++v) m[v >> 6] |= 1ULL << (v & 63);
    return m;
}

int mask_popcount(const Mask& m) {
    int s = 0;
    for (std::uint64_t w : m) s += std::popcount(w);
    return s;
}

int mask_first(const Mask& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i]) return static_cast<int>(i * 64) + std::countr_zero(m[i]);
    }
    return -1;
}

bool mask_empty(const Mask& m) {
    for (std::uint64_t w : m) {
        if (w) return false;
    }
    return true;
}

void mask_clear(Mask& m, int v) { m[v >> 6] &= ~(1ULL << (v & 63)); }
void mask_set(Mask& m, int v) { m[v >> 6] |= 1ULL << (v & 63); }

void mask_and_row(Mask& m, const Graph& G, int v) {
    const std::uint64_t* r = G.row(v);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] &= r[i];
}

bool mask_intersects_row(const Mask& m, const Graph& G, int v) {
    const std::uint64_t* r = G.row(v);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] & r[i]) return true;
    }
    return false;
}

// Is there a clique of `need` vertices inside the mask?
bool mask_has_clique(const Graph& G, const Mask& m, int need) {
    if (need <= 0) return true;
    if (mask_popcount(m) < need) return false;
    if (need == 1) return true;
    Mask rem = m;
    int v;
    while ((v = mask_first(rem)) >= 0) {
        mask_clear(rem, v);
        Mask nxt = rem;
        mask_and_row(nxt, G, v);
        if (mask_has_clique(G, nxt, need - 1)) return true;
    }
    return false;
}

struct TaskOut {
    std::vector<int> best;
    unsigned long long nodes = 0;
    bool hit = false;
};

// Searches share NO state across tasks: pruning floors are task-local (plus
// the deterministic seed), so node counts, budget hits, and the reported set
// are identical for every thread count.  Determinism is bought at the price
// of not sharing bounds between tasks.
unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

template <typename Fn>
void run_tasks(std::size_t count, unsigned threads, Fn&& fn) {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    threads = std::min<std::size_t>(resolve_threads(threads), count ? count : 1);
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 0; t + 1 < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

struct CliqueWorker {
    const Graph& G;
    unsigned long long slice;
    int seed;  // size already achieved elsewhere (witnessed); prune below it
    unsigned long long nodes = 0;
    bool hit = false;
    std::vector<int> cur, best;

    int floor_size() const {
        return std::max<int>(static_cast<int>(best.size()), seed);
    }

    int color_bound(const Mask& cand) {
        std::vector<Mask> classes;
        Mask rem = cand;
        int v;
        while ((v = mask_first(rem)) >= 0) {
            mask_clear(rem, v);
            bool placed = false;
            for (Mask& cl : classes) {
                if (!mask_intersects_row(cl, G, v)) {
                    mask_set(cl, v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                classes.emplace_back(cand.size(), 0);
                mask_set(classes.back(), v);
            }
        }
        return static_cast<int>(classes.size());
    }

    void expand(const Mask& cand) {
        if (hit) return;
        if (++nodes > slice) {
            hit = true;
            return;
        }
        int pc = mask_popcount(cand);
        if (static_cast<int>(cur.size()) + pc < floor_size()) return;
        if (pc >= 3 &&
            static_cast<int>(cur.size()) + color_bound(cand) < floor_size()) {
            return;
        }
        Mask rem = cand;
        int remaining = pc;
        while (remaining > 0) {
            if (static_cast<int>(cur.size()) + remaining < floor_size()) return;
            int v = mask_first(rem);
            mask_clear(rem, v);
            --remaining;
            cur.push_back(v);
            if (cur.size() > best.size()) best = cur;
            Mask nxt = rem;
            mask_and_row(nxt, G, v);
            if (!mask_empty(nxt)) expand(nxt);
            cur.pop_back();
            if (hit) return;
        }
    }
};

struct KfreeWorker {
    const Graph& G;
    int k;
    unsigned long long slice;
    int seed;
    unsigned long long nodes = 0;
    bool hit = false;
    std::vector<int> cur, best;
    Mask cur_mask;

    int floor_size() const {
        return std::max<int>(static_cast<int>(best.size()), seed);
    }

    // Would adding v close a K_k inside the chosen set?
    bool addable(int v) {
        Mask m = cur_mask;
        mask_and_row(m, G, v);
        if (k == 3) {
            // triangle iff any edge inside chosen-and-adjacent-to-v
            Mask rem = m;
            int u;
            while ((u = mask_first(rem)) >= 0) {
                mask_clear(rem, u);
                if (mask_intersects_row(m, G, u)) return false;
            }
            return true;
        }
        return !mask_has_clique(G, m, k - 1);
    }

    void dfs(int idx) {
        if (hit) return;
        if (++nodes > slice) {
            hit = true;
            return;
        }
        if (idx >= G.n) return;
        int avail = 0;
        for (int j = idx; j < G.n; ++j) {
            if (addable(j)) ++avail;
        }
        if (static_cast<int>(cur.size()) + avail < floor_size()) return;
        if (addable(idx)) {
            cur.push_back(idx);
            mask_set(cur_mask, idx);
            if (cur.size() > best.size()) best = cur;
            dfs(idx + 1);
            mask_clear(cur_mask, idx);
            cur.pop_back();
            if (hit) return;
        }
        dfs(idx + 1);
    }
};

// Deterministic lower-bound witnesses used to seed every task's pruning
// floor.  Ascending-order greedy; independent of thread count.
int greedy_clique_size(const Graph& G) {
    Mask cand = suffix_mask(G.n, G.words, 0);
    int size = 0, v;
    while ((v = mask_first(cand)) >= 0) {
        ++size;
        mask_clear(cand, v);
        mask_and_row(cand, G, v);
    }
    return size;
}

int greedy_kfree_size(const Graph& G, int k) {
    KfreeWorker w{G, k, /*slice=*/~0ULL, /*seed=*/0};
    w.cur_mask.assign(G.words, 0);
    int size = 0;
    for (int v = 0; v < G.n; ++v) {
        if (w.addable(v)) {
            mask_set(w.cur_mask, v);
            ++size;
        }
    }
    return size;
}

void merge_tasks(SearchReport& rep, const std::vector<TaskOut>& tasks) {
    for (const TaskOut& t : tasks) {
        rep.nodes += t.nodes;
        rep.budget_hit = rep.budget_hit || t.hit;
        if (t.best.size() > rep.best_set.size()) rep.best_set = t.best;
    }
    rep.size = rep.best_set.size();
    rep.optimal = !rep.budget_hit;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

SearchReport clique_search(const Graph& G, unsigned long long budget,
                           unsigned threads, int seed) {
    auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    if (G.n == 0) {
        rep.elapsed_seconds = seconds_since(t0);
        return rep;
    }
    seed = std::max(seed, greedy_clique_size(G));
    const std::size_t count = static_cast<std::size_t>(G.n);
    const unsigned long long slice =
        std::max<unsigned long long>(1, budget / count);
    std::vector<TaskOut> tasks(count);
    run_tasks(count, threads, [&](std::size_t i) {
        CliqueWorker w{G, slice, seed};
        w.nodes = 1;  // the root inclusion itself
        w.cur.push_back(static_cast<int>(i));
        w.best = w.cur;
        Mask cand = suffix_mask(G.n, G.words, static_cast<int>(i) + 1);
        mask_and_row(cand, G, static_cast<int>(i));
        if (!mask_empty(cand)) w.expand(cand);
        tasks[i] = TaskOut{std::move(w.best), w.nodes, w.hit};
    });
    merge_tasks(rep, tasks);
    for (std::size_t a = 0; a < rep.best_set.size(); ++a) {
        for (std::size_t b = a + 1; b < rep.best_set.size(); ++b) {
            require(G.edge(rep.best_set[a], rep.best_set[b]),
                    "InvariantViolation",
                    "search returned a vertex set that is not a clique");
        }
    }
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

SearchReport kfree_search(const Graph& G, int k, unsigned long long budget,
                          unsigned threads, int seed) {
    auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    if (G.n == 0) {
        rep.elapsed_seconds = seconds_since(t0);
        return rep;
    }
    seed = std::max(seed, greedy_kfree_size(G, k));
    const std::size_t count = static_cast<std::size_t>(G.n);
    const unsigned long long slice =
        std::max<unsigned long long>(1, budget / count);
    std::vector<TaskOut> tasks(count);
    run_tasks(count, threads, [&](std::size_t i) {
        KfreeWorker w{G, k, slice, seed};
        w.nodes = 1;
        w.cur_mask.assign(G.words, 0);
        w.cur.push_back(static_cast<int>(i));
        mask_set(w.cur_mask, static_cast<int>(i));
        w.best = w.cur;
        w.dfs(static_cast<int>(i) + 1);
        tasks[i] = TaskOut{std::move(w.best), w.nodes, w.hit};
    });
    merge_tasks(rep, tasks);
    Mask chosen(G.words, 0);
    for (int v : rep.best_set) mask_set(chosen, v);
    require(!mask_has_clique(G, chosen, k), "InvariantViolation",
            "search returned a set whose induced subgraph contains K_k");
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

struct VectorGraph {
    BilinearForm B;
    std::vector<Vec> vectors;
    Graph G;
};

VectorGraph vector_graph(std::uint32_t q, std::uint32_t n, Kind cls,
                         bool edge_on_orthogonal, int vertex_cap) {
    FieldPtr F = field_from_order(q);
    BilinearForm B = canonical_form(F, n, cls);
    unsigned long long total = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        total *= q;
        require(total <= static_cast<unsigned long long>(vertex_cap) + 1,
                "TooLarge", "q^n - 1 exceeds the vertex budget of " +
                                std::to_string(vertex_cap));
    }
    std::vector<Vec> vecs;
    vecs.reserve(total - 1);
    for (unsigned long long idx = 1; idx < total; ++idx) {
        vecs.push_back(decode_vec(*F, idx, n));
    }
    Graph G(static_cast<int>(vecs.size()));
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        for (std::size_t j = i + 1; j < vecs.size(); ++j) {
            const bool orth = eval_form(B, vecs[i], vecs[j]) == 0;
            if (orth == edge_on_orthogonal) {
                G.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return VectorGraph{std::move(B), std::move(vecs), std::move(G)};
}

}  // namespace

SearchReport max_clique(const Graph& G, unsigned long long budget,
                        unsigned threads) {
    return clique_search(G, budget, threads, 0);
}

SearchReport max_induced_kfree(const Graph& G, int k,
                               unsigned long long budget, unsigned threads) {
    require(k >= 3, "BadParams", "needs k >= 3");
    require(G.n <= kMaxKfreeVertices, "TooLarge",
            "K_k-free search supports at most 1024 vertices");
    return kfree_search(G, k, budget, threads, 0);
}

long long best_construction_size(std::uint32_t q, std::uint32_t n, Kind cls,
                                 int k) {
    long long best = -1;
    auto consider = [&best](Construction (*gen)(std::uint32_t, std::uint32_t,
                                                Kind),
                            std::uint32_t gq, std::uint32_t gn, Kind gc) {
        try {
            Construction c = gen(gq, gn, gc);
            best = std::max(best, static_cast<long long>(c.S.size()));
        } catch (const OrthoError&) {
        }
    };
    if (k == 3) {
        if (q % 2 == 1) {
            if (n % 2 == 1 && n >= 3 && (cls == Kind::one || cls == Kind::gamma)) {
                consider(
                    [](std::uint32_t a, std::uint32_t b, Kind c) {
                        return example_odd_dim(a, b, c);
                    },
                    q, n, cls);
            }
            if (n % 2 == 0 && cls == Kind::one) {
                consider(
                    [](std::uint32_t a, std::uint32_t b, Kind) {
                        return example_even_eps1(a, b);
                    },
                    q, n, cls);
            }
            if (n % 2 == 0 && cls == Kind::gamma) {
                consider(
                    [](std::uint32_t a, std::uint32_t b, Kind) {
                        return example_even_epsgamma(a, b);
                    },
                    q, n, cls);
            }
        } else if (q == 2) {
            if (cls == Kind::dot && n % 2 == 1 && n >= 3) {
                consider(
                    [](std::uint32_t, std::uint32_t b, Kind) {
                        return example_binary_odd(b);
                    },
                    q, n, cls);
            }
            if (cls == Kind::dot && n % 2 == 0) {
                consider(
                    [](std::uint32_t, std::uint32_t b, Kind) {
                        return example_binary_even_dot(b);
                    },
                    q, n, cls);
            }
            if (cls == Kind::dot && n == 4) {
                consider(
                    [](std::uint32_t, std::uint32_t, Kind) {
                        return remark2_set();
                    },
                    q, n, cls);
            }
            if (cls == Kind::dot && n == 2) {
                consider(
                    [](std::uint32_t, std::uint32_t, Kind) {
                        return remark2_n2_set();
                    },
                    q, n, cls);
            }
            if (cls == Kind::hyperbolic && n % 2 == 0) {
                consider(
                    [](std::uint32_t, std::uint32_t b, Kind) {
                        return example_binary_hyperbolic(b);
                    },
                    q, n, cls);
            }
        }
    }
    if (k == 4 && n == 4 && q % 2 == 1 && cls == Kind::one) {
        consider(
            [](std::uint32_t a, std::uint32_t, Kind) {
                return example_k4_n4(a);
            },
            q, n, cls);
    }
    return best;
}

SearchReport max_orthogonal_set(std::uint32_t q, std::uint32_t n, Kind cls,
                                unsigned long long budget, unsigned threads) {
    VectorGraph vg = vector_graph(q, n, cls, /*edge_on_orthogonal=*/true,
                                  kMaxGraphVertices);
    SearchReport rep = clique_search(vg.G, budget, threads, 0);
    rep.best_vectors.reserve(rep.best_set.size());
    for (int v : rep.best_set) rep.best_vectors.push_back(vg.vectors[v]);
    if (!rep.best_vectors.empty()) {
        OrthoSet S = make_set(vg.B, rep.best_vectors);
        require(is_orthogonal_set(S), "InvariantViolation",
                "clique engine returned a non-orthogonal set");
    }
    if (q % 2 == 1 && (cls == Kind::one || cls == Kind::gamma)) {
        BoundValue bv = bound_formulas(q, n, cls, BoundKind::s22);
        rep.formula_kind = "s22";
        rep.formula_value = bv.value;
        rep.formula_in_range = bv.in_range;
        rep.formula_exact = true;
    } else if (q == 2 && cls == Kind::dot) {
        BoundValue bv = bound_formulas(q, n, cls, BoundKind::s22_binary);
        rep.formula_kind = "s22_binary";
        rep.formula_value = bv.value;
        rep.formula_in_range = bv.in_range;
        rep.formula_exact = true;
    }
    rep.matches_formula = rep.formula_exact && rep.formula_in_range &&
                          rep.formula_value ==
                              static_cast<long long>(rep.size);
    return rep;
}

SearchReport max_kl_set(std::uint32_t q, std::uint32_t n, Kind cls, int k,
                        unsigned long long budget, unsigned threads) {
    require(k >= 3, "BadParams", "exact (k,2) search needs k >= 3");
    VectorGraph vg = vector_graph(q, n, cls, /*edge_on_orthogonal=*/false,
                                  kMaxKfreeVertices);
    const long long cons = best_construction_size(q, n, cls, k);
    SearchReport rep = kfree_search(vg.G, k, budget, threads,
                                    cons > 0 ? static_cast<int>(cons) : 0);
    rep.construction_size = cons;
    rep.best_vectors.reserve(rep.best_set.size());
    for (int v : rep.best_set) rep.best_vectors.push_back(vg.vectors[v]);
    if (!rep.best_vectors.empty()) {
        OrthoSet S = make_set(vg.B, rep.best_vectors);
        KlReport kl = is_kl_report(S, k, 2);
        require(kl.holds, "InvariantViolation",
                "K_k-free engine returned a set that is not (k,2)-orthogonal");
    }
    if (k == 3) {
        if (q % 2 == 1 && (cls == Kind::one || cls == Kind::gamma)) {
            BoundValue bv = bound_formulas(q, n, cls, BoundKind::s32_odd_q);
            rep.formula_kind = "s32_odd_q";
            rep.formula_value = bv.value;
            rep.formula_in_range = bv.in_range;
            rep.formula_exact = true;
        } else if (q == 2 &&
                   (cls == Kind::dot || cls == Kind::hyperbolic)) {
            BoundValue bv = bound_formulas(q, n, cls, BoundKind::s32_binary);
            rep.formula_kind = "s32_binary";
            rep.formula_value = bv.value;
            rep.formula_in_range = bv.in_range;
            rep.formula_exact = true;
        }
    } else {
        try {
            BoundValue bv =
                bound_formulas(q, n, cls, BoundKind::k2_bound,
                               static_cast<std::uint32_t>(k));
            rep.formula_kind = "k2_bound";
            rep.formula_value = bv.value;
            rep.formula_in_range = bv.in_range;
            rep.formula_exact = false;  // an upper bound, not an exact value
        } catch (const OrthoError&) {
            // no applicable bound (e.g. q < k); leave the formula fields empty
        }
    }
    rep.matches_formula = rep.formula_exact && rep.formula_in_range &&
                          rep.formula_value ==
                              static_cast<long long>(rep.size);
    return rep;
}

TableCell run_cell(std::uint32_t q, std::uint32_t n, Kind cls, int k,
                   unsigned long long budget, unsigned threads) {
    TableCell cell;
    cell.q = q;
    cell.n = n;
    cell.cls = cls;
    cell.k = k;
    try {
        cell.rep = (k == 2) ? max_orthogonal_set(q, n, cls, budget, threads)
                            : max_kl_set(q, n, cls, k, budget, threads);
        if (cell.rep.budget_hit) {
            cell.error = "BudgetExceeded";
            cell.sandwich_ok = false;
            return cell;
        }
        const long long value = static_cast<long long>(cell.rep.size);
        if (cell.rep.construction_size >= 0 &&
            cell.rep.construction_size > value) {
            cell.sandwich_ok = false;  // a witness beats the "exact" search
        }
        if (!cell.rep.formula_kind.empty() && cell.rep.formula_in_range &&
            value > cell.rep.formula_value) {
            cell.sandwich_ok = false;  // proven bound violated
        }
    } catch (const OrthoError& e) {
        cell.error = e.code();
        cell.sandwich_ok = false;
    }
    return cell;
}

std::vector<TableCell> run_table(const std::vector<TableCell>& cells,
                                 unsigned long long budget, unsigned threads) {
    std::vector<TableCell> out;
    out.reserve(cells.size());
    for (const TableCell& c : cells) {
        out.push_back(run_cell(c.q, c.n, c.cls, c.k, budget, threads));
    }
    return out;
}

}  // namespace ortholab
