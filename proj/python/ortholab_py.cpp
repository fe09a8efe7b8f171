// Python bindings for the main operations: fields, form classification,
// named constructions, exact searches, closed-form bounds and verification.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ortholab/charsum.hpp"
#include "ortholab/constructions.hpp"
#include "ortholab/errors.hpp"
#include "ortholab/graphs.hpp"
#include "ortholab/json_io.hpp"
#include "ortholab/search.hpp"

namespace py = pybind11;
using namespace ortholab;

namespace {

Mat mat_from_rows(const FieldPtr& F,
                  const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t n = rows.size();
    Mat A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        require(rows[i].size() == n, "ShapeMismatch",
                "matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            F->check_element(rows[i][j]);
            A.at(i, j) = rows[i][j];
        }
    }
    return A;
}

std::vector<std::vector<std::uint32_t>> rows_from_mat(const Mat& A) {
    std::vector<std::vector<std::uint32_t>> rows(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        rows[i].resize(A.cols);
        for (std::size_t j = 0; j < A.cols; ++j) rows[i][j] = A.at(i, j);
    }
    return rows;
}

py::dict report_dict(std::uint32_t q, std::uint32_t n, Kind cls, int k,
                     unsigned long long budget, const SearchReport& rep) {
    py::dict d;
    d["size"] = rep.size;
    d["optimal"] = rep.optimal;
    d["nodes"] = rep.nodes;
    d["vectors"] = rep.best_vectors;
    d["construction_size"] = rep.construction_size;
    if (!rep.formula_kind.empty()) {
        d["formula_kind"] = rep.formula_kind;
        d["formula_value"] = rep.formula_value;
        d["formula_in_range"] = rep.formula_in_range;
        d["matches_formula"] = rep.matches_formula;
    }
    d["certificate"] =
        search_certificate(q, n, cls, k, budget, rep).dump(2);
    return d;
}

}  // namespace

PYBIND11_MODULE(_ortholab, m) {
    m.doc() = "finite-field bilinear forms and exact extremal-set searches";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const OrthoError& e) {
            PyErr_SetString(PyExc_ValueError,
                            (std::string(e.code()) + ": " + e.what()).c_str());
        }
    });

    m.def(
        "field_info",
        [](std::uint32_t q) {
            FieldPtr F = field_from_order(q);
            py::dict d;
            d["p"] = F->p;
            d["m"] = F->m;
            d["q"] = F->q;
            d["modulus"] = F->modulus;
            d["gamma"] = F->gamma;
            return d;
        },
        py::arg("q"), "Prime-power field parameters, modulus and a fixed "
                      "non-square.");

    m.def(
        "canonical_matrix",
        [](std::uint32_t q, std::uint32_t n, const std::string& cls) {
            FieldPtr F = field_from_order(q);
            return rows_from_mat(canonical_form(F, n, kind_from_label(cls)).A);
        },
        py::arg("q"), py::arg("n"), py::arg("cls"),
        "Gram matrix of the canonical representative of a class.");

    m.def(
        "classify_form",
        [](std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& A) {
            FieldPtr F = field_from_order(q);
            FormClass fc = classify(make_form(F, mat_from_rows(F, A)));
            py::dict d;
            d["n"] = fc.n;
            d["rank"] = fc.rank;
            d["cls"] = fc.label();
            return d;
        },
        py::arg("q"), py::arg("matrix"),
        "Rank and equivalence class of a symmetric bilinear form.");

    m.def(
        "construct",
        [](const std::string& name, std::uint32_t q, std::uint32_t n,
           const std::string& eps) {
            Construction c =
                construction_by_name(name, q, n, kind_from_label(eps));
            py::dict d;
            d["name"] = c.name;
            d["size"] = c.S.size();
            d["k"] = c.k;
            d["l"] = c.l;
            d["vectors"] = c.S.vectors;
            d["certificate"] = construction_to_json(c).dump(2);
            return d;
        },
        py::arg("name"), py::arg("q") = 0, py::arg("n") = 0,
        py::arg("eps") = "one", "Build a named example set (self-verified).");

    m.def("construction_names", &construction_names,
          "Names accepted by construct().");

    m.def(
        "verify_set",
        [](std::uint32_t q, std::uint32_t n,
           const std::vector<std::vector<std::uint32_t>>& gram,
           const std::vector<Vec>& vectors, int k, int l) {
            FieldPtr F = field_from_order(q);
            OrthoSet S =
                make_set(make_form(F, mat_from_rows(F, gram)), vectors);
            KlReport r = is_kl_report(S, k, l);
            py::dict d;
            d["holds"] = r.holds;
            d["witness"] = r.witness;
            return d;
        },
        py::arg("q"), py::arg("n"), py::arg("gram"), py::arg("vectors"),
        py::arg("k") = 3, py::arg("l") = 2,
        "Check the every-k-subset-has-l-orthogonal property.");

    m.def(
        "search",
        [](std::uint32_t q, std::uint32_t n, const std::string& cls, int k,
           unsigned long long budget, unsigned threads) {
            const Kind c = kind_from_label(cls);
            SearchReport rep =
                k == 2 ? max_orthogonal_set(q, n, c, budget, threads)
                       : max_kl_set(q, n, c, k, budget, threads);
            return report_dict(q, n, c, k, budget, rep);
        },
        py::arg("q"), py::arg("n"), py::arg("cls"), py::arg("k") = 2,
        py::arg("budget") = kDefaultNodeBudget, py::arg("threads") = 0,
        "Exact largest orthogonal (k=2) or (k,2)-orthogonal set.");

    m.def(
        "bound",
        [](std::uint32_t q, std::uint32_t n, const std::string& cls,
           const std::string& kind, std::uint32_t k) {
            BoundValue b = bound_formulas(q, n, kind_from_label(cls),
                                          bound_kind_from_label(kind), k);
            py::dict d;
            d["value"] = b.value;
            d["in_range"] = b.in_range;
            return d;
        },
        py::arg("q"), py::arg("n"), py::arg("cls"), py::arg("kind"),
        py::arg("k") = 0, "Closed-form table and bound values.");

    m.def(
        "count_orthogonal_pairs",
        [](std::uint32_t q, std::uint32_t n, const std::string& cls,
           const std::vector<Vec>& X, const std::vector<Vec>& Y) {
            FieldPtr F = field_from_order(q);
            BilinearForm B = canonical_form(F, n, kind_from_label(cls));
            return ortholab::count_orthogonal_pairs(B, X, Y);
        },
        py::arg("q"), py::arg("n"), py::arg("cls"), py::arg("X"),
        py::arg("Y"),
        "Exact number of orthogonal pairs, with the square-root deviation "
        "bound re-asserted internally.");

    m.def("verify_c5", &verify_c5_lemma,
          "Exhaustive five-vertex near-orthogonality check.");

    m.def(
        "ramsey",
        []() {
            RamseyFacts rf = ramsey_facts();
            py::dict d;
            d["r33_lower_ok"] = rf.r33_lower_ok;
            d["r33_upper_ok"] = rf.r33_upper_ok;
            d["r34_ok"] = rf.r34_ok;
            d["binom_34"] = rf.binom_34;
            return d;
        },
        "Small Ramsey facts re-verified by enumeration.");
}
