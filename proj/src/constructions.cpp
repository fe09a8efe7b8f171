#include "ortholab/constructions.hpp"

#include <set>

#include "ortholab/errors.hpp"

namespace ortholab {

namespace {

long long ipow(std::uint32_t base, std::uint32_t e) {
    long long r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= static_cast<long long>(base);
    return r;
}

// The k free parameters of a displayed family, enumerated 1 .. q^k - 1 in
// integer encoding order (first parameter least significant).
std::vector<Vec> parameter_tuples(const Field& F, std::uint32_t k) {
    std::vector<Vec> out;
    const long long total = ipow(F.q, k);
    out.reserve(total - 1);
    for (long long idx = 1; idx < total; ++idx) {
        out.push_back(decode_vec(F, static_cast<unsigned long long>(idx), k));
    }
    return out;
}

Vec unit(std::size_t n, std::size_t i /*0-based*/) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

void verify_part_orthogonal(const BilinearForm& B,
                            const std::vector<Vec>& part) {
    for (std::size_t i = 0; i < part.size(); ++i) {
        for (std::size_t j = i + 1; j < part.size(); ++j) {
            require(eval_form(B, part[i], part[j]) == 0, "InvariantViolation",
                    "advertised part is not an orthogonal set");
        }
    }
}

Construction finish(Construction c, Kind expected_class) {
    require(static_cast<long long>(c.S.size()) == c.advertised_size,
            "InvariantViolation", "construction size mismatch: got " +
                std::to_string(c.S.size()) + ", advertised " +
                std::to_string(c.advertised_size));
    KlReport rep = is_kl_report(c.S, c.k, c.l);
    require(rep.holds, "InvariantViolation",
            "construction is not (" + std::to_string(c.k) + "," +
                std::to_string(c.l) + ")-orthogonal");
    for (const auto& part : c.parts) verify_part_orthogonal(c.S.B, part);
    if (c.parts_disjoint) {
        for (std::size_t a = 0; a < c.parts.size(); ++a) {
            std::set<Vec> seen(c.parts[a].begin(), c.parts[a].end());
            for (std::size_t b = a + 1; b < c.parts.size(); ++b) {
                for (const Vec& v : c.parts[b]) {
                    require(!seen.count(v), "InvariantViolation",
                            "advertised parts are not disjoint");
                }
            }
        }
    }
    FormClass fc = classify(c.S.B);
    require(fc.kind == expected_class, "InvariantViolation",
            "emitted form classifies as " + kind_label(fc.kind) +
                ", expected " + kind_label(expected_class));
    return c;
}

}  // namespace

Construction example_odd_dim(std::uint32_t q, std::uint32_t n, Kind eps) {
    require(q % 2 == 1, "BadParams", "needs odd q");
    require(n >= 3 && n % 2 == 1, "BadParams", "needs odd n >= 3");
    require(eps == Kind::one || eps == Kind::gamma, "BadParams",
            "class must be one or gamma");
    FieldPtr F = field_from_order(q);
    const std::uint32_t k = (n - 1) / 2;
    BilinearForm B = canonical_form(F, n, eps);
    const Felt eps_el = (eps == Kind::one) ? 1 : F->gamma;
    const Felt minus_two_inv_eps =
        F->neg(F->mul(F->add(1, 1), F->inv(eps_el)));

    std::vector<Vec> s1, s2;
    for (const Vec& x : parameter_tuples(*F, k)) {
        Vec v(n, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
            v[2 * i] = x[i];
            v[2 * i + 1] = x[i];
        }
        s1.push_back(v);
        for (std::uint32_t i = 0; i < k; ++i) v[2 * i + 1] = F->neg(x[i]);
        s2.push_back(v);
    }
    Vec sp1(n, 0);  // e_{n-2} + e_{n-1} + e_n
    sp1[n - 3] = 1;
    sp1[n - 2] = 1;
    sp1[n - 1] = 1;
    s1.push_back(sp1);
    Vec sp2(n, 0);  // e_{n-2} - e_{n-1} - 2 eps^{-1} e_n
    sp2[n - 3] = 1;
    sp2[n - 2] = F->neg(1);
    sp2[n - 1] = minus_two_inv_eps;
    s2.push_back(sp2);

    std::vector<Vec> all = s1;
    all.insert(all.end(), s2.begin(), s2.end());
    all.push_back(unit(n, n - 1));

    Construction c;
    c.name = "odd-dim";
    c.S = make_set(std::move(B), std::move(all));
    c.advertised_size = 2 * ipow(q, k) + 1;
    c.parts = {std::move(s1), std::move(s2), {unit(n, n - 1)}};
    return finish(std::move(c), eps);
}

Construction example_even_eps1(std::uint32_t q, std::uint32_t n) {
    require(q % 2 == 1, "BadParams", "needs odd q");
    require(n >= 2 && n % 2 == 0, "BadParams", "needs even n >= 2");
    FieldPtr F = field_from_order(q);
    const std::uint32_t k = n / 2;
    BilinearForm B = canonical_form(F, n, Kind::one);

    std::vector<Vec> s1, s2;
    for (const Vec& x : parameter_tuples(*F, k)) {
        Vec v(n, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
            v[2 * i] = x[i];
            v[2 * i + 1] = x[i];
        }
        s1.push_back(v);
        for (std::uint32_t i = 0; i < k; ++i) v[2 * i + 1] = F->neg(x[i]);
        s2.push_back(v);
    }
    std::vector<Vec> all = s1;
    all.insert(all.end(), s2.begin(), s2.end());

    Construction c;
    c.name = "even-eps1";
    c.S = make_set(std::move(B), std::move(all));
    c.advertised_size = 2 * ipow(q, k) - 2;
    c.parts = {std::move(s1), std::move(s2)};
    return finish(std::move(c), Kind::one);
}

Construction example_even_epsgamma(std::uint32_t q, std::uint32_t n) {
    require(q % 4 == 3, "BadParams", "needs q = 3 (mod 4)");
    require(n >= 2 && n % 2 == 0, "BadParams", "needs even n >= 2");
    FieldPtr F = field_from_order(q);
    // Literal discriminant -1: alternating diag(1,-1,...) with the last
    // entry flipped to +1.  Since -1 is a non-square here, this classifies
    // as gamma (asserted below via classification, not matrix equality).
    Mat A = Mat::identity(n);
    for (std::uint32_t i = 0; i + 1 < n; i += 2) A.at(i + 1, i + 1) = F->neg(1);
    A.at(n - 1, n - 1) = 1;
    BilinearForm B = make_form(F, A);

    Construction c;
    c.name = "even-epsgamma";
    if (n == 2) {
        std::vector<Vec> all = {
            {1, 0}, {2, 0}, {0, 1}, {0, 2}};  // e1, 2e1, e2, 2e2
        c.S = make_set(std::move(B), std::move(all));
        c.advertised_size = 4;
        return finish(std::move(c), Kind::gamma);
    }

    const std::uint32_t k = n / 2;
    std::vector<Vec> s1, s2;
    for (const Vec& x : parameter_tuples(*F, k - 1)) {
        Vec v(n, 0);
        for (std::uint32_t i = 0; i + 1 < k; ++i) {
            v[2 * i] = x[i];
            v[2 * i + 1] = x[i];
        }
        s1.push_back(v);
        for (std::uint32_t i = 0; i + 1 < k; ++i) v[2 * i + 1] = F->neg(x[i]);
        s2.push_back(v);
    }
    auto special = [&](Felt c2, Felt c3, Felt c4) {
        Vec v(n, 0);
        v[n - 4] = 1;
        v[n - 3] = c2;
        v[n - 2] = c3;
        v[n - 1] = c4;
        return v;
    };
    const Felt m1 = F->neg(1);
    s1.push_back(special(1, 1, 1));    // e_{n-3}+e_{n-2}+e_{n-1}+e_n
    s1.push_back(special(1, 1, m1));   // e_{n-3}+e_{n-2}+e_{n-1}-e_n
    s2.push_back(special(m1, m1, m1)); // e_{n-3}-e_{n-2}-e_{n-1}-e_n
    s2.push_back(special(m1, m1, 1));  // e_{n-3}-e_{n-2}-e_{n-1}+e_n
    std::vector<Vec> s3;
    Vec p(n, 0), m(n, 0);
    p[n - 2] = 1;
    p[n - 1] = 1;
    m[n - 2] = 1;
    m[n - 1] = m1;
    s3.push_back(p);
    s3.push_back(m);

    std::vector<Vec> all = s1;
    all.insert(all.end(), s2.begin(), s2.end());
    all.insert(all.end(), s3.begin(), s3.end());
    c.S = make_set(std::move(B), std::move(all));
    c.advertised_size = 2 * ipow(q, k - 1) + 4;
    c.parts = {std::move(s1), std::move(s2), std::move(s3)};
    return finish(std::move(c), Kind::gamma);
}

Construction example_binary_odd(std::uint32_t n) {
    require(n >= 3 && n % 2 == 1, "BadParams", "needs odd n >= 3");
    FieldPtr F = field_create(2, 1);
    const std::uint32_t k = (n - 1) / 2;
    BilinearForm B = canonical_form(F, n, Kind::dot);

    std::vector<Vec> s1, s2;
    for (const Vec& x : parameter_tuples(*F, k)) {
        Vec v(n, 0);  // (0, x1, x1, ..., xk, xk)
        for (std::uint32_t i = 0; i < k; ++i) {
            v[2 * i + 1] = x[i];
            v[2 * i + 2] = x[i];
        }
        s1.push_back(v);
        Vec w(n, 0);  // (x1, x1, ..., xk, xk, 0)
        for (std::uint32_t i = 0; i < k; ++i) {
            w[2 * i] = x[i];
            w[2 * i + 1] = x[i];
        }
        s2.push_back(w);
    }
    s1.push_back(unit(n, 0));      // e_1
    s2.push_back(unit(n, n - 1));  // e_n

    std::vector<Vec> all = s1;
    all.insert(all.end(), s2.begin(), s2.end());
    all.push_back(Vec(n, 1));  // all-ones

    Construction c;
    c.name = "binary-odd";
    c.S = make_set(std::move(B), std::move(all));
    c.advertised_size = ipow(2, k + 1) + 1;
    c.parts = {std::move(s1), std::move(s2), {Vec(n, 1)}};
    return finish(std::move(c), Kind::dot);
}

Construction example_binary_even_dot(std::uint32_t n) {
    require(n >= 2 && n % 2 == 0, "BadParams", "needs even n >= 2");
    FieldPtr F = field_create(2, 1);
    const std::uint32_t k = n / 2;
    BilinearForm B = canonical_form(F, n, Kind::dot);

    std::vector<Vec> s1, s2;
    for (const Vec& x : parameter_tuples(*F, k)) {
        Vec v(n, 0);  // (x1, x1, ..., xk, xk)
        for (std::uint32_t i = 0; i < k; ++i) {
            v[2 * i] = x[i];
            v[2 * i + 1] = x[i];
        }
        s1.push_back(v);
        Vec w(n, 0);  // (xk, x1, x1, ..., x_{k-1}, x_{k-1}, xk)
        w[0] = x[k - 1];
        w[n - 1] = x[k - 1];
        for (std::uint32_t i = 0; i + 1 < k; ++i) {
            w[2 * i + 1] = x[i];
            w[2 * i + 2] = x[i];
        }
        s2.push_back(w);
    }
    std::set<Vec> seen(s1.begin(), s1.end());
    std::vector<Vec> all = s1;
    std::size_t overlap = 0;
    for (const Vec& w : s2) {
        if (seen.insert(w).second) {
            all.push_back(w);
        } else {
            require(w == Vec(n, 1), "InvariantViolation",
                    "unexpected overlap beyond the all-ones vector");
            ++overlap;
        }
    }
    require(overlap == 1, "InvariantViolation",
            "expected exactly one overlapping vector");

    Construction c;
    c.name = "binary-even-dot";
    c.S = make_set(std::move(B), std::move(all));
    c.advertised_size = ipow(2, k + 1) - 3;
    c.parts = {std::move(s1), std::move(s2)};
    c.parts_disjoint = false;  // all-ones lies in both parts by design
    return finish(std::move(c), Kind::dot);
}

Construction example_binary_hyperbolic(std::uint32_t n) {
    require(n >= 2 && n % 2 == 0, "BadParams", "needs even n >= 2");
    FieldPtr F = field_create(2, 1);
    const std::uint32_t k = n / 2;
    BilinearForm B = canonical_form(F, n, Kind::hyperbolic);

    std::vector<Vec> s1, s2;
    for (const Vec& x : parameter_tuples(*F, k)) {
        Vec v(n, 0);  // span of odd-position units
        Vec w(n, 0);  // span of even-position units
        for (std::uint32_t i = 0; i < k; ++i) {
            v[2 * i] = x[i];
            w[2 * i + 1] = x[i];
        }
        s1.push_back(v);
        s2.push_back(w);
    }
    std::vector<Vec> all = s1;
    all.insert(all.end(), s2.begin(), s2.end());

    Construction c;
    c.name = "binary-hyperbolic";
    c.S = make_set(std::move(B), std::move(all));
    c.advertised_size = ipow(2, k + 1) - 2;
    c.parts = {std::move(s1), std::move(s2)};
    return finish(std::move(c), Kind::hyperbolic);
}

Construction example_k4_n4(std::uint32_t q) {
    require(q % 2 == 1, "BadParams", "needs odd q");
    FieldPtr F = field_from_order(q);
    const std::uint32_t n = 4;
    BilinearForm B = canonical_form(F, n, Kind::one);

    std::vector<Vec> s1, s2, s3;
    for (const Vec& x : parameter_tuples(*F, 2)) {
        const Felt a = x[0], b = x[1];
        s1.push_back({a, a, b, b});
        s2.push_back({a, F->neg(a), b, F->neg(b)});
        s3.push_back({a, b, b, F->neg(a)});
    }
    std::vector<Vec> all = s1;
    all.insert(all.end(), s2.begin(), s2.end());
    all.insert(all.end(), s3.begin(), s3.end());

    Construction c;
    c.name = "k4-n4";
    c.k = 4;
    c.S = make_set(std::move(B), std::move(all));
    c.advertised_size = 3 * (ipow(q, 2) - 1);
    c.parts = {std::move(s1), std::move(s2), std::move(s3)};
    return finish(std::move(c), Kind::one);
}

Construction remark2_set() {
    FieldPtr F = field_create(2, 1);
    BilinearForm B = canonical_form(F, 4, Kind::dot);
    std::vector<Vec> all = {{1, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 1, 1},
                            {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 1, 1, 0},
                            {1, 1, 0, 1}};
    Construction c;
    c.name = "remark2";
    c.S = make_set(std::move(B), std::move(all));
    c.advertised_size = 7;
    return finish(std::move(c), Kind::dot);
}

Construction remark2_n2_set() {
    FieldPtr F = field_create(2, 1);
    BilinearForm B = canonical_form(F, 2, Kind::dot);
    std::vector<Vec> all = {{1, 0}, {0, 1}, {1, 1}};
    Construction c;
    c.name = "remark2-n2";
    c.S = make_set(std::move(B), std::move(all));
    c.advertised_size = 3;
    return finish(std::move(c), Kind::dot);
}

Construction construction_by_name(const std::string& name, std::uint32_t q,
                                  std::uint32_t n, Kind eps) {
    if (name == "odd-dim") return example_odd_dim(q, n, eps);
    if (name == "even-eps1") return example_even_eps1(q, n);
    if (name == "even-epsgamma") return example_even_epsgamma(q, n);
    if (name == "binary-odd") return example_binary_odd(n);
    if (name == "binary-even-dot") return example_binary_even_dot(n);
    if (name == "binary-hyperbolic") return example_binary_hyperbolic(n);
    if (name == "k4-n4") return example_k4_n4(q);
    if (name == "remark2") return remark2_set();
    if (name == "remark2-n2") return remark2_n2_set();
    fail("BadParams", "unknown construction: " + name);
}

std::vector<std::string> construction_names() {
    return {"odd-dim",    "even-eps1",       "even-epsgamma",
            "binary-odd", "binary-even-dot", "binary-hyperbolic",
            "k4-n4",      "remark2",         "remark2-n2"};
}

}  // namespace ortholab
