#include "ortholab/gf.hpp"

#include <array>
#include <cmath>

namespace ortholab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Dense polynomial helpers over GF(p); coefficient vectors store c_0 first.
using Poly = std::vector<std::uint32_t>;

std::size_t degree(const Poly& f) {
    std::size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;  // deg(0) treated as 0 by callers that care
}

bool is_zero(const Poly& f) {
    for (auto c : f)
        if (c) return false;
    return true;
}

// f mod g in place (g monic of degree dg > 0).
void poly_mod(Poly& f, const Poly& g, std::uint32_t p, std::size_t dg) {
    for (std::size_t i = f.size(); i-- > dg;) {
        std::uint32_t c = f[i];
        if (!c) continue;
        f[i] = 0;
        for (std::size_t j = 0; j < dg; ++j) {
            std::uint64_t t = static_cast<std::uint64_t>(c) * g[j];
            std::uint32_t sub = static_cast<std::uint32_t>(t % p);
            f[i - dg + j] = (f[i - dg + j] + p - sub) % p;
        }
    }
    f.resize(dg);
}

bool divides(const Poly& g, Poly f, std::uint32_t p) {
    std::size_t dg = degree(g);
    poly_mod(f, g, p, dg);
    return is_zero(f);
}

Poly decode(std::uint64_t v, std::uint32_t p, std::size_t len) {
    Poly f(len, 0);
    for (std::size_t i = 0; i < len && v; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
    }
    return f;
}

// Monic degree-m polynomial irreducible over GF(p)?  Trial division by every
// monic polynomial of degree 1..m/2 (exhaustive at desk scale).
bool irreducible(const Poly& f, std::uint32_t p, std::uint32_t m) {
    if (m == 1) return true;
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly g = decode(v, p, d + 1);
            g[d] = 1;  // monic
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m) {
    if (q < 2) return false;
    std::uint32_t base = q;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    std::uint64_t acc = 1;
    std::uint32_t count = 0;
    while (acc < q) {
        acc *= base;
        ++count;
    }
    if (acc != q) return false;
    p = base;
    m = count;
    return true;
}

FieldPtr field_create(std::uint32_t p, std::uint32_t m) {
    require(p >= 2, "NotPrime", "p must be at least 2");
    require(is_prime(p), "NotPrime", std::to_string(p) + " is not prime");
    require(m >= 1, "BadParams", "m must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        require(q <= kMaxFieldOrder, "Overflow",
                "field order exceeds budget 2^16");
    }

    auto F = std::make_shared<Field>();
    F->p = p;
    F->m = m;
    F->q = static_cast<std::uint32_t>(q);

    if (m == 1) {
        F->modulus = {0, 1};  // the polynomial x
    } else {
        // First monic irreducible of degree m in encoding order.
        bool found = false;
        for (std::uint64_t v = 0; v < q; ++v) {
            Poly f = decode(v, p, m + 1);
            f[m] = 1;
            if (irreducible(f, p, m)) {
                F->modulus.assign(f.begin(), f.end());
                found = true;
                break;
            }
        }
        require(found, "InvariantViolation", "no irreducible modulus found");
    }

    if (F->odd()) {
        Felt g = 0;
        for (Felt x = 1; x < F->q; ++x) {
            if (!F->is_square(x)) {
                g = x;
                break;
            }
        }
        require(g != 0, "InvariantViolation", "no non-square found in odd field");
        // gamma^((q-1)/2) must be the field element -1.
        require(F->pow(g, (F->q - 1) / 2) == F->neg(1), "InvariantViolation",
                "canonical non-square fails the character test");
        F->gamma = g;
    }
    return F;
}

FieldPtr field_from_order(std::uint32_t q) {
    std::uint32_t p = 0, m = 0;
    require(prime_power(q, p, m), "NotPrime",
            std::to_string(q) + " is not a prime power");
    return field_create(p, m);
}

Felt Field::add(Felt a, Felt b) const {
    check_element(a);
    check_element(b);
    if (m == 1) return (a + b) % p;
    Felt out = 0, mult = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t ca = a % p, cb = b % p;
        a /= p;
        b /= p;
        out += ((ca + cb) % p) * mult;
        mult *= p;
    }
    return out;
}

Felt Field::neg(Felt a) const {
    check_element(a);
    if (m == 1) return a == 0 ? 0 : p - a;
    Felt out = 0, mult = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t ca = a % p;
        a /= p;
        out += (ca == 0 ? 0 : p - ca) * mult;
        mult *= p;
    }
    return out;
}

Felt Field::mul(Felt a, Felt b) const {
    check_element(a);
    check_element(b);
    if (m == 1) return static_cast<Felt>((static_cast<std::uint64_t>(a) * b) % p);
    // Schoolbook product of the residue polynomials, then reduce by the modulus.
    std::array<std::uint32_t, 64> prod{};
    std::array<std::uint32_t, 32> ca{}, cb{};
    for (std::uint32_t i = 0; i < m; ++i) {
        ca[i] = a % p;
        a /= p;
        cb[i] = b % p;
        b /= p;
    }
    for (std::uint32_t i = 0; i < m; ++i) {
        if (!ca[i]) continue;
        for (std::uint32_t j = 0; j < m; ++j) {
            if (!cb[j]) continue;
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p);
        }
    }
    for (std::uint32_t i = 2 * m - 2 + 1; i-- > m;) {
        std::uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < m; ++j) {
            std::uint64_t t = static_cast<std::uint64_t>(c) * modulus[j];
            std::uint32_t sub = static_cast<std::uint32_t>(t % p);
            prod[i - m + j] = (prod[i - m + j] + p - sub) % p;
        }
    }
    Felt out = 0, mult = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        out += prod[i] * mult;
        mult *= p;
    }
    return out;
}

Felt Field::pow(Felt a, long long e) const {
    check_element(a);
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Felt base = a, out = 1;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
        if (k & 1ULL) out = mul(out, base);
        base = mul(base, base);
        k >>= 1;
    }
    return out;
}

Felt Field::inv(Felt a) const {
    check_element(a);
    require(a != 0, "DivisionByZero", "inverse of zero");
    return pow(a, static_cast<long long>(q) - 2);
}

bool Field::is_square(Felt a) const {
    check_element(a);
    if (a == 0) return true;
    if (!odd()) return true;  // squaring is bijective in characteristic 2
    return pow(a, (q - 1) / 2) == 1;
}

Felt Field::trace(Felt a) const {
    check_element(a);
    Felt acc = 0, t = a;
    for (std::uint32_t i = 0; i < m; ++i) {
        acc = add(acc, t);
        t = pow(t, p);
    }
    return acc;
}

std::complex<double> Field::psi(Felt a) const {
    Felt t = trace(a);  // element of the prime subfield: encoding < p
    double angle = kTwoPi * static_cast<double>(t) / static_cast<double>(p);
    return {std::cos(angle), std::sin(angle)};
}

Felt Field::from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Felt>(r);
}

}  // namespace ortholab
