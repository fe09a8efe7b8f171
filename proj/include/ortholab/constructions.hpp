#pragma once

#include "ortholab/orthosets.hpp"

namespace ortholab {

// A generated set together with its advertised structure; every generator
// re-verifies the advertised properties before returning (size, (k,l)
// orthogonality, part orthogonality/disjointness, form class) and raises
// InvariantViolation on any mismatch.
struct Construction {
    std::string name;
    OrthoSet S;
    int k = 3;
    int l = 2;
    long long advertised_size = 0;
    std::vector<std::vector<Vec>> parts;  // advertised sub-decomposition
    bool parts_disjoint = true;           // false: overlap documented instead
};

// Odd dimension n = 2k+1 >= 3, odd q, class eps in {one, gamma};
// size 2 q^k + 1.
Construction example_odd_dim(std::uint32_t q, std::uint32_t n, Kind eps);

// Even dimension n = 2k >= 2, odd q, class one; size 2 q^k - 2.
Construction example_even_eps1(std::uint32_t q, std::uint32_t n);

// Even dimension n = 2k >= 2, q = 3 (mod 4), class gamma via the literal
// -1 discriminant matrix; size 2 q^{k-1} + 4 for n >= 4, size 4 for n = 2.
Construction example_even_epsgamma(std::uint32_t q, std::uint32_t n);

// q = 2, dot product, odd n = 2k+1 >= 3; size 2^{k+1} + 1.
Construction example_binary_odd(std::uint32_t n);

// q = 2, dot product, even n = 2k >= 2; size 2^{k+1} - 3 (one documented
// overlap between the two parts).
Construction example_binary_even_dot(std::uint32_t n);

// q = 2, alternating pairs form, even n = 2k >= 2; size 2^{k+1} - 2.
Construction example_binary_hyperbolic(std::uint32_t n);

// Odd q, n = 4, class one; union of three orthogonal sets of total size
// 3(q^2 - 1), no four pairwise non-orthogonal members.
Construction example_k4_n4(std::uint32_t q);

// The seven-vector witness in F_2^4 under the dot product.
Construction remark2_set();

// All three nonzero vectors of F_2^2 under the dot product (size 3).
Construction remark2_n2_set();

// CLI dispatch by name: "odd-dim", "even-eps1", "even-epsgamma",
// "binary-odd", "binary-even-dot", "binary-hyperbolic", "k4-n4", "remark2",
// "remark2-n2".
Construction construction_by_name(const std::string& name, std::uint32_t q,
                                  std::uint32_t n, Kind eps);

std::vector<std::string> construction_names();

}  // namespace ortholab
