#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "ortholab/errors.hpp"

namespace ortholab {

// A field element of GF(p^m), encoded as value = sum c_i * p^i where
// (c_0, ..., c_{m-1}) are the coefficients of the residue polynomial.
using Felt = std::uint32_t;

// Elements are plain integers; all arithmetic goes through a Field, which is
// immutable after creation and freely shareable across threads.
struct Field {
    std::uint32_t p = 0;  // characteristic (prime)
    std::uint32_t m = 0;  // extension degree
    std::uint32_t q = 0;  // p^m
    std::vector<std::uint32_t> modulus;  // c_0..c_m of the monic irreducible modulus
    Felt gamma = 0;       // least non-square in encoding order; only set for odd q

    bool operator==(const Field& o) const {
        return p == o.p && m == o.m && modulus == o.modulus;
    }

    bool odd() const { return p != 2; }

    void check_element(Felt a) const {
        require(a < q, "Overflow", "element " + std::to_string(a) +
                                       " out of range for q=" + std::to_string(q));
    }

    Felt add(Felt a, Felt b) const;
    Felt neg(Felt a) const;
    Felt sub(Felt a, Felt b) const { return add(a, neg(b)); }
    Felt mul(Felt a, Felt b) const;
    Felt inv(Felt a) const;                       // DivisionByZero on 0
    Felt pow(Felt a, long long e) const;          // negative e inverts first
    bool is_square(Felt a) const;                 // 0 counts as a square
    Felt trace(Felt a) const;                     // lands in the prime subfield
    std::complex<double> psi(Felt a) const;       // exp(2*pi*i * trace(a) / p)
    Felt from_int(long long v) const;             // embed an integer via the prime subfield
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint32_t v);

// Decompose q = p^m; false when q is not a prime power (or q < 2).
bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m);

// Build GF(p^m).  The modulus is the first monic irreducible polynomial of
// degree m in encoding order (coefficient vectors ordered by sum c_i * p^i),
// re-verified irreducible by trial division.  Errors: NotPrime, Overflow.
FieldPtr field_create(std::uint32_t p, std::uint32_t m);

// Convenience: build GF(q) for a prime power q.  Errors: NotPrime, Overflow.
FieldPtr field_from_order(std::uint32_t q);

// Largest supported field order.
constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

}  // namespace ortholab
