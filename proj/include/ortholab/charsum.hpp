#pragma once

#include <complex>

#include "ortholab/forms.hpp"

namespace ortholab {

// Additive-character sums.  psi(a) = exp(2*pi*i * trace(a) / p), so every
// summand has unit modulus; sums are accumulated with compensated summation
// in a fixed order and are bit-reproducible.

// Sum of psi(B(s, x)) over the subspace H spanned by H_basis (which must be
// linearly independent).  The map x -> psi(B(s, x)) is an additive character
// of H, so the result is |H| when s is orthogonal to H and 0 otherwise; the
// computed sum is checked against that dichotomy to within 1e-9 * |H|.
// Errors: ShapeMismatch, BadParams (dependent basis), TooLarge (|H| > 10^7),
// InvariantViolation (dichotomy check failed - an implementation-bug signal).
std::complex<double> char_sum_subspace(const BilinearForm& B, const Vec& s,
                                       const std::vector<Vec>& H_basis);

// Double character sum: sum of psi(B(x, y)) over x in X, y in Y.
// Requires a non-degenerate form; asserts the unconditional inequality
// |sum| <= sqrt(|X| * |Y| * q^n) + 1e-6 and the Cauchy-Schwarz step
// |sum|^2 <= |X| * sum_x |inner_x|^2 before returning.
// Errors: ShapeMismatch, Degenerate, TooLarge (|X||Y| > 10^8), BoundViolated
// (either inequality failed - an implementation-bug signal).
std::complex<double> bilinear_char_sum(const BilinearForm& B,
                                       const std::vector<Vec>& X,
                                       const std::vector<Vec>& Y);

// Exact count of pairs (x, y) with B(x, y) = 0, by integer enumeration (the
// character identity is never used, so the bound below is an independent
// cross-check).  Requires a non-degenerate form; asserts
// |count - |X||Y|/q| <= sqrt(|X| * |Y| * q^n) + 1e-6.
// Errors: ShapeMismatch, Degenerate, TooLarge, BoundViolated.
long long count_orthogonal_pairs(const BilinearForm& B,
                                 const std::vector<Vec>& X,
                                 const std::vector<Vec>& Y);

}  // namespace ortholab
