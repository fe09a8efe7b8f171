#pragma once

#include "ortholab/orthosets.hpp"

namespace ortholab {

constexpr unsigned long long kDefaultNodeBudget = 1'000'000'000ULL;

// Result of an exact search.  `optimal` is true only when every branch was
// either exhausted or soundly pruned; a budget hit leaves the best found so
// far with optimal = false.  Identical inputs and budgets yield an identical
// best_set regardless of thread count (node totals are fixed too, since the
// task decomposition and per-task budget do not depend on threads; only
// wall-clock time varies) — for completed searches the reported set is the
// lexicographically least optimum under the fixed vertex order.
struct SearchReport {
    std::vector<int> best_set;      // vertex indices, ascending
    std::vector<Vec> best_vectors;  // filled by the vector-backed wrappers
    std::size_t size = 0;
    bool optimal = true;
    unsigned long long nodes = 0;
    double elapsed_seconds = 0.0;
    bool budget_hit = false;

    // Wrapper extras (max_orthogonal_set / max_kl_set):
    std::string formula_kind;        // empty when no closed form applies
    long long formula_value = -1;
    bool formula_in_range = false;   // within stated theorem hypotheses
    bool formula_exact = false;      // closed form is an exact value, not
                                     // just an upper bound
    bool matches_formula = false;
    long long construction_size = -1;  // -1: no applicable generator
};

// Maximum clique via branch-and-bound with greedy-coloring bounds and
// bit-parallel candidate sets; vertices are explored in input order.
SearchReport max_clique(const Graph& G,
                        unsigned long long budget = kDefaultNodeBudget,
                        unsigned threads = 0);

// Maximum vertex subset whose induced subgraph contains no K_k (k >= 3),
// via include/exclude DFS with incremental clique rejection.
SearchReport max_induced_kfree(const Graph& G, int k,
                               unsigned long long budget = kDefaultNodeBudget,
                               unsigned threads = 0);

// Largest orthogonal set of nonzero vectors under the canonical form of the
// class: clique search on the orthogonality graph, compared against the
// closed-form table value.
SearchReport max_orthogonal_set(std::uint32_t q, std::uint32_t n, Kind cls,
                                unsigned long long budget = kDefaultNodeBudget,
                                unsigned threads = 0);

// Largest (k,2)-orthogonal set under the canonical form of the class:
// K_k-free search on the non-orthogonality graph, with formula and
// best-construction comparisons.
SearchReport max_kl_set(std::uint32_t q, std::uint32_t n, Kind cls, int k,
                        unsigned long long budget = kDefaultNodeBudget,
                        unsigned threads = 0);

// Largest applicable generator output for the cell; -1 when none applies.
long long best_construction_size(std::uint32_t q, std::uint32_t n, Kind cls,
                                 int k);

struct TableCell {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    Kind cls = Kind::one;
    int k = 3;  // k = 2 runs the orthogonal-set engine
    SearchReport rep;
    std::string error;       // error code when the cell failed to run
    bool sandwich_ok = true; // construction <= search <= in-range formula
};

// Runs one grid cell; never throws — failures are recorded in `error`.
TableCell run_cell(std::uint32_t q, std::uint32_t n, Kind cls, int k,
                   unsigned long long budget = kDefaultNodeBudget,
                   unsigned threads = 0);

// Runs every cell, continuing past per-cell failures.
std::vector<TableCell> run_table(const std::vector<TableCell>& cells,
                                 unsigned long long budget = kDefaultNodeBudget,
                                 unsigned threads = 0);

}  // namespace ortholab
