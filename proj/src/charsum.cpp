#include "ortholab/charsum.hpp"

#include <cmath>

#include "ortholab/linalg.hpp"

namespace ortholab {

namespace {

struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

void check_shape(const BilinearForm& B, const Vec& v) {
    require(v.size() == B.dim(), "ShapeMismatch",
            "vector length does not match the form dimension");
    for (Felt c : v) B.F->check_element(c);
}

// Row vector r with r . y = B(x, y).
Vec left_mul(const BilinearForm& B, const Vec& x) {
    const Field& F = *B.F;
    const std::size_t n = B.dim();
    Vec r(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        Felt acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            acc = F.add(acc, F.mul(x[i], B.A.at(i, j)));
        }
        r[j] = acc;
    }
    return r;
}

Felt dot(const Field& F, const Vec& a, const Vec& b) {
    Felt acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc = F.add(acc, F.mul(a[i], b[i]));
    }
    return acc;
}

void check_pair_budget(const BilinearForm& B, const std::vector<Vec>& X,
                       const std::vector<Vec>& Y) {
    require(!is_degenerate(B), "Degenerate",
            "the inequality being asserted requires a non-degenerate form");
    const unsigned long long pairs =
        static_cast<unsigned long long>(X.size()) * Y.size();
    require(pairs <= 100'000'000ULL, "TooLarge",
            "|X| * |Y| exceeds the 10^8 pair budget");
    for (const Vec& x : X) check_shape(B, x);
    for (const Vec& y : Y) check_shape(B, y);
}

double sqrt_bound(const BilinearForm& B, std::size_t nx, std::size_t ny) {
    return std::sqrt(static_cast<double>(nx) * static_cast<double>(ny) *
                     std::pow(static_cast<double>(B.F->q),
                              static_cast<double>(B.dim())));
}

}  // namespace

std::complex<double> char_sum_subspace(const BilinearForm& B, const Vec& s,
                                       const std::vector<Vec>& H_basis) {
    const Field& F = *B.F;
    check_shape(B, s);
    for (const Vec& b : H_basis) check_shape(B, b);
    require(span_basis(F, H_basis).size() == H_basis.size(), "BadParams",
            "H_basis is linearly dependent");

    const std::size_t dim = H_basis.size();
    unsigned long long H = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        H *= F.q;
        require(H <= 10'000'000ULL, "TooLarge",
                "|H| = q^dim exceeds the 10^7 enumeration budget");
    }

    // u[i] = B(s, basis[i]); the character value along x is tracked
    // incrementally as an odometer over the coefficient tuple.
    std::vector<Felt> u(dim, 0);
    bool orthogonal = true;
    for (std::size_t i = 0; i < dim; ++i) {
        u[i] = eval_form(B, s, H_basis[i]);
        if (u[i] != 0) orthogonal = false;
    }

    Kahan re, im;
    std::vector<std::uint32_t> digits(dim, 0);
    Felt t = 0;  // B(s, current x)
    for (unsigned long long step = 0;; ++step) {
        const std::complex<double> term = F.psi(t);
        re.add(term.real());
        im.add(term.imag());
        if (step + 1 == H) break;
        std::size_t i = 0;
        while (true) {
            t = F.add(t, u[i]);
            if (++digits[i] < F.q) break;
            digits[i] = 0;
            ++i;
        }
    }

    const std::complex<double> sum(re.sum, im.sum);
    const double expected = orthogonal ? static_cast<double>(H) : 0.0;
    require(std::abs(sum - expected) <= 1e-9 * static_cast<double>(H),
            "InvariantViolation",
            "subspace character sum deviates from the |H|-or-0 dichotomy");
    return sum;
}

std::complex<double> bilinear_char_sum(const BilinearForm& B,
                                       const std::vector<Vec>& X,
                                       const std::vector<Vec>& Y) {
    const Field& F = *B.F;
    check_pair_budget(B, X, Y);

    Kahan re, im, inner_sq;
    for (const Vec& x : X) {
        const Vec r = left_mul(B, x);
        Kahan ire, iim;
        for (const Vec& y : Y) {
            const std::complex<double> term = F.psi(dot(F, r, y));
            ire.add(term.real());
            iim.add(term.imag());
        }
        re.add(ire.sum);
        im.add(iim.sum);
        inner_sq.add(ire.sum * ire.sum + iim.sum * iim.sum);
    }

    const std::complex<double> sum(re.sum, im.sum);
    const double bound = sqrt_bound(B, X.size(), Y.size());
    require(std::abs(sum) <= bound + 1e-6, "BoundViolated",
            "double character sum exceeds sqrt(|X||Y|q^n); implementation bug");
    const double cs_rhs = static_cast<double>(X.size()) * inner_sq.sum;
    require(std::norm(sum) <= cs_rhs + 1e-6 * (1.0 + cs_rhs), "BoundViolated",
            "Cauchy-Schwarz step failed numerically; implementation bug");
    return sum;
}

long long count_orthogonal_pairs(const BilinearForm& B,
                                 const std::vector<Vec>& X,
                                 const std::vector<Vec>& Y) {
    const Field& F = *B.F;
    check_pair_budget(B, X, Y);

    long long count = 0;
    for (const Vec& x : X) {
        const Vec r = left_mul(B, x);
        for (const Vec& y : Y) {
            if (dot(F, r, y) == 0) ++count;
        }
    }

    const double main_term = static_cast<double>(X.size()) *
                             static_cast<double>(Y.size()) /
                             static_cast<double>(F.q);
    const double bound = sqrt_bound(B, X.size(), Y.size());
    require(std::abs(static_cast<double>(count) - main_term) <= bound + 1e-6,
            "BoundViolated",
            "orthogonal-pair count strays from |X||Y|/q by more than "
            "sqrt(|X||Y|q^n); implementation bug");
    return count;
}

}  // namespace ortholab
