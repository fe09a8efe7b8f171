#pragma once

#include <optional>
#include <string>

#include "ortholab/linalg.hpp"

namespace ortholab {

// Square-class / binary classification tags.  Odd fields use zero/one/gamma;
// GF(2) uses dot/hyperbolic/degenerate.  Tags are classes, never raw field
// elements, so equality is well-defined across representations.
enum class Kind { zero, one, gamma, dot, hyperbolic, degenerate };

std::string kind_label(Kind k);
Kind kind_from_label(const std::string& s);  // BadClass on unknown labels

struct FormClass {
    std::uint32_t n = 0;
    std::uint32_t rank = 0;
    Kind kind = Kind::zero;

    bool operator==(const FormClass&) const = default;
    std::string label() const { return kind_label(kind); }
};

// A symmetric bilinear form x^T A y over a fixed field.
struct BilinearForm {
    FieldPtr F;
    Mat A;

    std::size_t dim() const { return A.rows; }
};

// Validates: square, symmetric, entries in range.  Errors: ShapeMismatch,
// Overflow, BadParams.
BilinearForm make_form(FieldPtr F, Mat A);

Felt eval_form(const BilinearForm& B, const Vec& x, const Vec& y);

bool is_degenerate(const BilinearForm& B);

// The epsilon invariant with k = floor(n/2): zero if det = 0; one if (k even
// and det a nonzero square) or (k odd and -det a nonzero square); gamma
// otherwise.  Errors: EvenField for even q.
Kind epsilon(const BilinearForm& B);

// epsilon as a field element: 0, 1, or the canonical non-square.
Felt epsilon_element(const BilinearForm& B);

// Odd q or GF(2); GF(2^m) with m > 1 raises EvenField (out of scope).
FormClass classify(const BilinearForm& B);

// Odd n: diag(1,-1,...,1,-1,eps); even n: diag(1,-1,...,1,-1,1,-eps);
// GF(2): I_n for dot, H + ... + H for hyperbolic.  Errors: BadClass, EvenField.
Mat canonical_matrix(const Field& F, std::uint32_t n, Kind cls);
BilinearForm canonical_form(FieldPtr F, std::uint32_t n, Kind cls);

struct DiagResult {
    Mat D;  // diagonal
    Mat M;  // invertible, M^T A M = D (verified before returning)
};

// Congruent diagonalization over odd q.  Errors: EvenField.
DiagResult diagonalize(const BilinearForm& B);

// Invertible M with M^T * (B.matrix) * M = A.matrix when the classes agree.
// Degenerate pairs are handled by splitting off the radical; NotEquivalent
// when the forms are not congruent.  Errors: MixedFields, ShapeMismatch,
// NotEquivalent, EvenField (GF(2^m), m>1).
Mat equivalence_witness(const BilinearForm& A, const BilinearForm& B);

// Echelonized basis of X^perp = {v : B(v,x) = 0 for all x in X}.
std::vector<Vec> orthogonal_complement(const BilinearForm& B,
                                       const std::vector<Vec>& X);

struct RestrictResult {
    std::vector<Vec> basis;       // echelonized basis of {v,w}^perp
    BilinearForm restricted;      // Gram matrix on that basis
    bool hypothesis_holds = false;  // B(v,w)^2 != B(v,v)B(w,w)
    bool degenerate = false;        // restricted form degenerate
    bool classified = false;        // cls valid (odd q or GF(2))
    FormClass cls;
};

// Restriction of B to {v,w}^perp, with the induction-step guarantees
// re-verified: under the hypothesis the dimension drops by exactly 2 and the
// restriction is non-degenerate; for odd q with B(v,w) != 0 and B(w,w) = 0
// the epsilon class is preserved; over GF(2) with n even, v,w self-orthogonal
// and B(v,w) = 1 the binary type is preserved.  Errors: LinearlyDependent.
RestrictResult restrict_to_complement(const BilinearForm& B, const Vec& v,
                                      const Vec& w);

// A nonzero self-orthogonal vector, or nullopt iff the form is anisotropic.
// Exhaustive scan (least encoding index) when q^n <= 10^6, else a solve on
// the first coordinates of the diagonalized form.  Errors: Degenerate.
std::optional<Vec> find_isotropic(const BilinearForm& B);

// Dimension of a maximal totally isotropic subspace.  Errors: Degenerate.
std::uint32_t witt_index(const BilinearForm& B);

// Closed-form largest-orthogonal-subspace dimension per class:
// odd n -> (n-1)/2; even n -> n/2 for class one, n/2 - 1 for class gamma.
// GF(2): n/2 for hyperbolic; floor(n/2) for dot with n >= 2, 0 at n = 1.
// Errors: BadClass, EvenField.
std::uint32_t d_n_formula(std::uint32_t q, std::uint32_t n, Kind cls);

// Least square root in encoding order (0 -> 0); nullopt for non-squares.
std::optional<Felt> sqrt_element(const Field& F, Felt v);

}  // namespace ortholab
