// ortholab: finite-field bilinear forms, extremal orthogonal-set search and
// character-sum checks, with deterministic JSON certificates.
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ortholab/acceptance.hpp"
#include "ortholab/errors.hpp"
#include "ortholab/charsum.hpp"
#include "ortholab/constructions.hpp"
#include "ortholab/detrand.hpp"
#include "ortholab/json_io.hpp"
#include "ortholab/search.hpp"

namespace ol = ortholab;

namespace {

int exit_code_for(const std::string& code) {
    static const std::set<std::string> verification_failures = {
        "NotEquivalent",     "NotOrthogonal", "Not32Orthogonal",
        "BoundViolated",     "WitnessNotFound",
        "InvariantViolation"};
    if (code == "BudgetExceeded") return 3;
    if (verification_failures.count(code)) return 1;
    return 2;  // malformed input / unusable parameters
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    ol::require(static_cast<bool>(in), "ParseError",
                "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const ol::ojson& j, const std::string& out_path = "") {
    const std::string text = j.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        ol::require(static_cast<bool>(out), "ParseError",
                    "cannot write '" + out_path + "'");
        out << text;
    }
    std::cout << text;
}

ol::Vec parse_vec_csv(const ol::Field& F, const std::string& csv) {
    ol::Vec v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            const long long x = std::stoll(tok);
            ol::require(x >= 0 && x < static_cast<long long>(F.q), "BadParams",
                        "coordinate " + tok + " outside 0.." +
                            std::to_string(F.q - 1));
            v.push_back(static_cast<ol::Felt>(x));
        } catch (const std::invalid_argument&) {
            ol::fail("ParseError", "bad coordinate '" + tok + "'");
        } catch (const std::out_of_range&) {
            ol::fail("ParseError", "coordinate '" + tok + "' out of range");
        }
    }
    ol::require(!v.empty(), "BadParams", "empty vector");
    return v;
}

ol::BilinearForm load_form(const std::string& form_path, std::uint32_t q,
                           std::uint32_t n, const std::string& cls_label) {
    if (!form_path.empty()) {
        return ol::form_from_json(ol::parse_json(read_all(form_path)));
    }
    ol::require(q != 0 && n != 0, "BadParams",
                "give either --form FILE or --q/--n/--class");
    ol::FieldPtr F = ol::field_from_order(q);
    return ol::canonical_form(F, n, ol::kind_from_label(cls_label));
}

ol::ojson mat_json(const ol::Mat& M) {
    ol::ojson rows = ol::ojson::array();
    for (std::size_t i = 0; i < M.rows; ++i) {
        ol::ojson row = ol::ojson::array();
        for (std::size_t j = 0; j < M.cols; ++j) {
            row.push_back(M.at(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ol::ojson vecs_json(const std::vector<ol::Vec>& vs) {
    ol::ojson a = ol::ojson::array();
    for (const ol::Vec& v : vs) a.push_back(v);
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "finite-field bilinear forms, extremal orthogonal-set search and "
        "character-sum checks"};
    app.require_subcommand(1);

    // ---------------------------------------------------------------- field
    auto* cmd_field = app.add_subcommand("field", "print a field description");
    std::uint32_t field_q = 0;
    cmd_field->add_option("--q", field_q, "field order (prime power)")
        ->required();

    // ----------------------------------------------------------------- form
    auto* cmd_form =
        app.add_subcommand("form", "classify / transform bilinear forms");
    cmd_form->require_subcommand(1);
    std::string form_path, form_cls = "one", form_b_path;
    std::uint32_t form_q = 0, form_n = 0;
    std::string restrict_v, restrict_w;
    auto add_form_source = [&](CLI::App* c, bool with_file = true) {
        if (with_file) {
            c->add_option("--form", form_path, "form JSON file ('-' = stdin)");
        }
        c->add_option("--q", form_q, "field order");
        c->add_option("--n", form_n, "dimension");
        c->add_option("--class", form_cls,
                      "class label (one|gamma|dot|hyperbolic)");
    };
    auto* form_classify =
        cmd_form->add_subcommand("classify", "rank and equivalence class");
    add_form_source(form_classify);
    auto* form_canonical = cmd_form->add_subcommand(
        "canonical", "canonical representative of a class");
    add_form_source(form_canonical, /*with_file=*/false);
    auto* form_diag = cmd_form->add_subcommand(
        "diagonalize", "congruent diagonalization (odd q)");
    add_form_source(form_diag);
    auto* form_restrict = cmd_form->add_subcommand(
        "restrict", "restriction to the complement of a pair");
    add_form_source(form_restrict);
    form_restrict->add_option("--v", restrict_v, "first vector, e.g. 1,0,0,0")
        ->required();
    form_restrict->add_option("--w", restrict_w, "second vector")->required();
    auto* form_equiv = cmd_form->add_subcommand(
        "equiv", "congruence witness between two forms");
    form_equiv->add_option("--a", form_path, "first form JSON file")
        ->required();
    form_equiv->add_option("--b", form_b_path, "second form JSON file")
        ->required();

    // ------------------------------------------------------------ construct
    auto* cmd_construct = app.add_subcommand(
        "construct", "emit a named example set as a certificate");
    std::string cons_name, cons_eps = "one";
    std::uint32_t cons_q = 0, cons_n = 0;
    cmd_construct->add_option("name", cons_name, "generator name")->required();
    cmd_construct->add_option("--q", cons_q, "field order");
    cmd_construct->add_option("--n", cons_n, "dimension");
    cmd_construct->add_option("--eps", cons_eps, "class label for odd q");

    // --------------------------------------------------------------- verify
    auto* cmd_verify =
        app.add_subcommand("verify", "check (k,l)-orthogonality of a set");
    std::string verify_path = "-";
    int verify_k = 0, verify_l = 0;
    cmd_verify->add_option("--set", verify_path,
                           "set/certificate JSON file ('-' = stdin)");
    cmd_verify->add_option("--k", verify_k, "subset size (default from file)");
    cmd_verify->add_option("--l", verify_l,
                           "required mutually-orthogonal elements");

    // --------------------------------------------------------------- search
    auto* cmd_search = app.add_subcommand(
        "search", "exact largest orthogonal / (k,2)-orthogonal set");
    std::uint32_t search_q = 0, search_n = 0;
    std::string search_cls = "one", search_json;
    int search_k = 2, search_l = 2;
    unsigned search_threads = 0;
    unsigned long long search_budget = ol::kDefaultNodeBudget;
    cmd_search->add_option("--q", search_q, "field order")->required();
    cmd_search->add_option("--n", search_n, "dimension")->required();
    cmd_search->add_option("--class", search_cls, "form class label");
    cmd_search->add_option("--k", search_k, "k = 2: orthogonal set; k >= 3: "
                                            "every k-subset has an "
                                            "orthogonal pair");
    cmd_search->add_option("--l", search_l, "must be 2");
    cmd_search
        ->add_option("--budget-nodes", search_budget, "node budget")
        ->envname("ORTHO_BUDGET_NODES");
    cmd_search->add_option("--threads", search_threads,
                           "worker threads (0 = hardware)");
    cmd_search->add_option("--json", search_json, "also write the "
                                                  "certificate to this file");

    // -------------------------------------------------------------- charsum
    auto* cmd_charsum =
        app.add_subcommand("charsum", "additive character-sum checks");
    cmd_charsum->require_subcommand(1);
    std::uint32_t cs_q = 3, cs_n = 2;
    std::string cs_cls = "one", cs_form_path;
    unsigned long long cs_samples = 100, cs_seed = 1;
    std::size_t cs_max = 128;
    for (const char* name : {"vinogradov", "count"}) {
        auto* c = cmd_charsum->add_subcommand(
            name, name[0] == 'v'
                      ? "random (X,Y) double-sum bound checks"
                      : "orthogonal-pair counts vs the main term");
        c->add_option("--q", cs_q, "field order");
        c->add_option("--n", cs_n, "dimension");
        c->add_option("--class", cs_cls, "form class label");
        c->add_option("--form", cs_form_path, "form JSON file ('-' = stdin)");
        c->add_option("--sample", cs_samples, "number of random pairs");
        c->add_option("--seed", cs_seed, "deterministic RNG seed");
        c->add_option("--max-size", cs_max, "largest |X|, |Y| drawn");
    }

    // --------------------------------------------------------------- graphs
    auto* cmd_graphs =
        app.add_subcommand("graphs", "small-graph lemmas and Ramsey facts");
    cmd_graphs->require_subcommand(1);
    cmd_graphs->add_subcommand("c5",
                               "five-vertex near-orthogonality exhaustion");
    cmd_graphs->add_subcommand("ramsey", "R(3,3), R(3,4) and binomial bounds");

    // ---------------------------------------------------------------- table
    auto* cmd_table =
        app.add_subcommand("table", "run a whole verification suite");
    std::string table_suite = "acceptance";
    cmd_table->add_option("--suite", table_suite, "suite name");

    // -------------------------------------------------------------- certify
    auto* cmd_certify = app.add_subcommand(
        "certify", "re-verify a set file and write a certificate");
    std::string certify_in, certify_out;
    int certify_k = 3, certify_l = 2;
    cmd_certify->add_option("--set", certify_in, "set JSON file ('-' = stdin)")
        ->required();
    cmd_certify->add_option("--out", certify_out, "output certificate path")
        ->required();
    cmd_certify->add_option("--k", certify_k, "subset size");
    cmd_certify->add_option("--l", certify_l, "orthogonal elements required");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_field->parsed()) {
            ol::FieldPtr F = ol::field_from_order(field_q);
            ol::ojson j;
            j["v"] = 1;
            j["field"] = ol::field_to_json(*F);
            j["q"] = F->q;
            j["gamma"] = F->gamma;
            emit(j);
            return 0;
        }

        if (cmd_form->parsed()) {
            if (form_canonical->parsed()) {
                emit(ol::form_to_json(
                    load_form("", form_q, form_n, form_cls)));
                return 0;
            }
            if (form_equiv->parsed()) {
                ol::BilinearForm A =
                    ol::form_from_json(ol::parse_json(read_all(form_path)));
                ol::BilinearForm B =
                    ol::form_from_json(ol::parse_json(read_all(form_b_path)));
                ol::Mat W = ol::equivalence_witness(A, B);
                ol::ojson j;
                j["v"] = 1;
                j["witness"] = mat_json(W);
                emit(j);
                return 0;
            }
            ol::BilinearForm B =
                load_form(form_path, form_q, form_n, form_cls);
            if (form_classify->parsed()) {
                ol::FormClass fc = ol::classify(B);
                ol::ojson j;
                j["v"] = 1;
                j["n"] = fc.n;
                j["rank"] = fc.rank;
                j["class"] = fc.label();
                emit(j);
                return 0;
            }
            if (form_diag->parsed()) {
                ol::DiagResult d = ol::diagonalize(B);
                ol::ojson j;
                j["v"] = 1;
                j["form"] = ol::form_to_json(B);
                j["D"] = mat_json(d.D);
                j["M"] = mat_json(d.M);
                emit(j);
                return 0;
            }
            // restrict
            const ol::Field& F = *B.F;
            ol::Vec v = parse_vec_csv(F, restrict_v);
            ol::Vec w = parse_vec_csv(F, restrict_w);
            ol::RestrictResult r = ol::restrict_to_complement(B, v, w);
            ol::ojson j;
            j["v"] = 1;
            j["hypothesis_holds"] = r.hypothesis_holds;
            j["degenerate"] = r.degenerate;
            j["basis"] = vecs_json(r.basis);
            j["restricted"] = ol::form_to_json(r.restricted);
            if (r.classified) j["class"] = r.cls.label();
            emit(j);
            return 0;
        }

        if (cmd_construct->parsed()) {
            ol::Construction c = ol::construction_by_name(
                cons_name, cons_q, cons_n, ol::kind_from_label(cons_eps));
            emit(ol::construction_to_json(c));
            return 0;
        }

        if (cmd_verify->parsed()) {
            ol::ojson doc = ol::parse_json(read_all(verify_path));
            ol::OrthoSet S = ol::set_from_json(doc);
            int k = verify_k, l = verify_l;
            if (k == 0) k = doc.contains("k") ? doc["k"].get<int>() : 3;
            if (l == 0) l = doc.contains("l") ? doc["l"].get<int>() : 2;
            ol::KlReport r = ol::is_kl_report(S, k, l);
            emit(ol::verification_to_json(k, l, r));
            return r.holds ? 0 : 1;
        }

        if (cmd_search->parsed()) {
            ol::require(search_l == 2, "BadParams",
                        "only l = 2 searches are supported");
            const ol::Kind cls = ol::kind_from_label(search_cls);
            ol::SearchReport rep =
                search_k == 2
                    ? ol::max_orthogonal_set(search_q, search_n, cls,
                                             search_budget, search_threads)
                    : ol::max_kl_set(search_q, search_n, cls, search_k,
                                     search_budget, search_threads);
            std::cerr << "size=" << rep.size
                      << " optimal=" << (rep.optimal ? "true" : "false")
                      << " nodes=" << rep.nodes << " elapsed="
                      << rep.elapsed_seconds << "s\n";
            ol::ojson cert = ol::search_certificate(
                search_q, search_n, cls, search_k, search_budget, rep);
            emit(cert, search_json);
            return rep.budget_hit ? 3 : 0;
        }

        if (cmd_charsum->parsed()) {
            ol::BilinearForm B = load_form(cs_form_path, cs_q, cs_n, cs_cls);
            const ol::Field& F = *B.F;
            const std::uint32_t n = static_cast<std::uint32_t>(B.dim());
            unsigned long long total = 1;
            for (std::uint32_t i = 0; i < n; ++i) {
                ol::require(total <= 1'000'000ULL / F.q, "TooLarge",
                            "q^n too large for sampling");
                total *= F.q;
            }
            const std::size_t cap = static_cast<std::size_t>(
                std::min<unsigned long long>(cs_max, total));
            ol::require(cap >= 1, "BadParams", "--max-size must be >= 1");
            ol::DetRand rng(cs_seed);
            std::vector<std::uint64_t> pool(total);
            for (unsigned long long i = 0; i < total; ++i) pool[i] = i;
            const bool vino = cmd_charsum->get_subcommands().front()
                                  ->get_name() == "vinogradov";
            double worst = 0.0;
            for (unsigned long long t = 0; t < cs_samples; ++t) {
                rng.shuffle(pool);
                const std::size_t sx = 1 + rng.below(cap);
                std::vector<ol::Vec> X, Y;
                for (std::size_t i = 0; i < sx; ++i) {
                    X.push_back(ol::decode_vec(F, pool[i], n));
                }
                rng.shuffle(pool);
                const std::size_t sy = 1 + rng.below(cap);
                for (std::size_t i = 0; i < sy; ++i) {
                    Y.push_back(ol::decode_vec(F, pool[i], n));
                }
                const double bound =
                    std::sqrt(static_cast<double>(X.size()) *
                              static_cast<double>(Y.size()) *
                              static_cast<double>(total));
                if (vino) {
                    const std::complex<double> s =
                        ol::bilinear_char_sum(B, X, Y);
                    worst = std::max(worst, std::abs(s) / bound);
                } else {
                    const long long c = ol::count_orthogonal_pairs(B, X, Y);
                    const double main_term =
                        static_cast<double>(X.size()) *
                        static_cast<double>(Y.size()) /
                        static_cast<double>(F.q);
                    worst = std::max(
                        worst, std::abs(static_cast<double>(c) - main_term) /
                                   bound);
                }
            }
            ol::ojson j;
            j["v"] = 1;
            j["op"] = vino ? "vinogradov" : "count";
            j["field"] = ol::field_to_json(F);
            j["n"] = n;
            j["samples"] = cs_samples;
            j["seed"] = cs_seed;
            j["max_size"] = cap;
            j["worst_ratio"] = worst;  // <= 1 enforced per sample
            emit(j);
            return 0;
        }

        if (cmd_graphs->parsed()) {
            const bool c5 = cmd_graphs->get_subcommands().front()
                                ->get_name() == "c5";
            ol::ojson j;
            j["v"] = 1;
            if (c5) {
                const bool holds = ol::verify_c5_lemma();
                j["op"] = "c5";
                j["holds"] = holds;
                emit(j);
                return holds ? 0 : 1;
            }
            ol::RamseyFacts rf = ol::ramsey_facts();
            j["op"] = "ramsey";
            j["r33_lower_ok"] = rf.r33_lower_ok;
            j["r33_upper_ok"] = rf.r33_upper_ok;
            j["r34"] = ol::ojson{{"n", rf.r34_witness.n},
                                 {"connection", rf.r34_connection},
                                 {"ok", rf.r34_ok}};
            j["binom_33"] = ol::ramsey_binomial(3, 3);
            j["binom_34"] = rf.binom_34;
            const bool all = rf.r33_lower_ok && rf.r33_upper_ok && rf.r34_ok;
            emit(j);
            return all ? 0 : 1;
        }

        if (cmd_table->parsed()) {
            ol::require(table_suite == "acceptance", "BadParams",
                        "unknown suite '" + table_suite + "'");
            std::vector<ol::CriterionResult> rs =
                ol::run_acceptance(&std::cerr);
            ol::ojson arr = ol::ojson::array();
            for (const auto& r : rs) {
                arr.push_back(ol::ojson{{"criterion", r.number},
                                        {"name", r.name},
                                        {"pass", r.pass},
                                        {"detail", r.detail},
                                        {"seconds", r.seconds}});
            }
            ol::ojson j;
            j["v"] = 1;
            j["suite"] = "acceptance";
            j["pass"] = ol::all_pass(rs);
            j["criteria"] = std::move(arr);
            emit(j);
            return ol::all_pass(rs) ? 0 : 1;
        }

        if (cmd_certify->parsed()) {
            ol::ojson doc = ol::parse_json(read_all(certify_in));
            ol::OrthoSet S = ol::set_from_json(doc);
            ol::KlReport r = ol::is_kl_report(S, certify_k, certify_l);
            ol::ojson cert = ol::set_to_json(S);
            cert["type"] = "certified-set";
            cert["k"] = certify_k;
            cert["l"] = certify_l;
            cert["verification"] =
                ol::verification_to_json(certify_k, certify_l, r);
            emit(cert, certify_out);
            return r.holds ? 0 : 1;
        }
    } catch (const ol::OrthoError& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
