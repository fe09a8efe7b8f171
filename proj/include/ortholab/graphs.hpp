#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ortholab/errors.hpp"

namespace ortholab {

// Bit-packed undirected graph (symmetric, irreflexive); n <= 4096.
struct Graph {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    Graph() = default;
    explicit Graph(int vertices);

    const std::uint64_t* row(int i) const { return bits.data() + static_cast<std::size_t>(i) * words; }
    std::uint64_t* row(int i) { return bits.data() + static_cast<std::size_t>(i) * words; }

    bool edge(int i, int j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1ULL;
    }
    void add_edge(int i, int j);
    void remove_edge(int i, int j);

    int degree(int i) const;
    long long edge_count() const;
    Graph complement() const;
    std::vector<std::pair<int, int>> edges() const;  // i < j, sorted
};

constexpr int kMaxGraphVertices = 4096;

bool is_triangle_free(const Graph& G);

// Exact clique decision for modest sizes (the extremal searches in the search
// module carry budgets; this one is for verifier-scale graphs).
bool has_clique(const Graph& G, int k);

// Lexicographically least k-clique as sorted vertex indices, if any.
std::vector<int> find_clique(const Graph& G, int k);

// Exact, n <= 64 (TooLarge beyond).
int independence_number(const Graph& G);

// Exhaustive check over all 2^10 five-vertex and 2^15 six-vertex graphs:
// whenever G and its complement are both triangle-free, the graph has at most
// 4 vertices or is the 5-cycle.  True on full success.
bool verify_c5_lemma();

struct RamseyFacts {
    bool r33_lower_ok = false;   // C5 witness: both sides triangle-free
    bool r33_upper_ok = false;   // every 6-vertex graph has a mono triangle
    std::vector<int> r34_connection;  // circulant connection set of the witness
    Graph r34_witness;           // 8 vertices, triangle-free, independence 3
    bool r34_ok = false;
    long long binom_34 = 0;      // binomial bound at (3,4); exceeds the true 9
};

// Errors: WitnessNotFound (bug signal; witnesses exist).
RamseyFacts ramsey_facts();

// R(s,t) <= C(s+t-2, s-1)
long long ramsey_binomial(int s, int t);

// Exact rational (1 - 1/r) * n^2 / 2 as a reduced fraction {num, den}.
std::pair<long long, long long> turan_bound(long long r, long long n_vertices);

}  // namespace ortholab
