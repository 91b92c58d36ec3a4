#ifndef HERMGRS_CLI_HPP
#define HERMGRS_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermgrs/document.hpp"

namespace hermgrs {

/// Exit-code contract: 0 success, 1 verification failure, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification = 1;
inline constexpr int exit_usage = 2;

namespace cli_detail {

// Failures where the mathematics said "no" map to the verification exit
// code; everything else (bad flags, malformed input, blown caps) is usage.
inline int exit_code_for(Errc code) {
    switch (code) {
        case Errc::not_in_family:
        case Errc::no_feasible_lambda:
        case Errc::norm_infeasible:
        case Errc::verification_failed:
            return exit_verification;
        default:
            return exit_usage;
    }
}

struct Caps {
    std::uint64_t enumeration = default_enum_cap;
    std::uint64_t subsets = default_subset_cap;
};

inline Caps caps_from_env() {
    Caps caps;
    if (const char* text = std::getenv("HERMGRS_MAX_ENUM")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(text, &end, 10);
        if (end == text || *end != '\0' || value == 0)
            fail(Errc::bad_argument, "HERMGRS_MAX_ENUM must be a positive integer");
        caps.enumeration = value;
        caps.subsets = value;
    }
    return caps;
}

inline std::string index_list(const std::vector<std::uint32_t>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
    return s + "]";
}

inline std::string elt_list(const std::vector<Elt>& xs) { return index_list(detail::indices_of(xs)); }

inline void write_json_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) fail(Errc::bad_argument, "cannot open output file " + path);
    file << text;
}

inline CodeDocument read_document(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) fail(Errc::bad_document, "cannot open input file " + path);
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    return document_from_string(text);
}

inline void print_document_human(std::ostream& out, const FieldTower& t, const CodeDocument& doc) {
    out << "[" << doc.n << ", " << doc.k << "] GRS code over F_" << t.q2() << " (q = " << t.q() << ", p = " << doc.p
        << ", m = " << doc.m << ")\n";
    out << "alpha       = " << index_list(doc.alpha) << "\n";
    out << "v           = " << index_list(doc.v) << "\n";
    out << "u           = " << index_list(doc.u) << "\n";
    if (doc.witness_kind == "lambda") out << "lambda      = " << doc.lambda << "\n";
    if (doc.witness_kind == "poly") out << "g           = " << index_list(doc.g) << "\n";
    out << "gram_zero   = " << (doc.gram_zero ? "true" : "false") << "\n";
    out << "theorem7_ok = " << (doc.theorem7_ok ? "true" : "false") << "\n";
    if (doc.mds_checked)
        out << "min_dist    = " << *doc.mds_checked << (1 + doc.n - doc.k == *doc.mds_checked ? " (= n-k+1)" : "")
            << "\n";
}

inline void attach_mds(Certificate& cert, const GrsCode& code, std::uint64_t cap, std::ostream& err) {
    try {
        cert.mds_checked = min_distance_bruteforce(code, cap);
    } catch (const Error& e) {
        if (e.code() != Errc::too_large_to_enumerate) throw;
        err << "note: minimum distance not recorded, q^{2k} exceeds the enumeration cap\n";
    }
}

inline void emit_document(std::ostream& out, std::ostream&, const FieldTower& t, const CodeDocument& doc,
                          bool as_json, const std::string& out_path) {
    const std::string text = document_to_string(doc);
    if (!out_path.empty()) write_json_file(out_path, text);
    if (as_json)
        out << text;
    else
        print_document_human(out, t, doc);
}

inline void print_family_set(std::ostream& out, const char* name, const FieldTower& t, Elt a, Elt b,
                             const std::vector<Elt>& set, bool valid, bool as_json) {
    if (as_json) {
        nlohmann::json j;
        j["kind"] = name;
        j["a"] = a.index();
        j["b"] = b.index();
        j["valid"] = valid;
        j["size"] = set.size();
        j["elements"] = detail::indices_of(set);
        out << j.dump(2) << "\n";
        return;
    }
    out << name << "(a = " << a.index() << ", b = " << b.index() << ") over F_" << t.q2() << ": size " << set.size()
        << ", valid family: " << (valid ? "yes" : "no") << "\n";
    out << "elements = " << elt_list(set) << "\n";
}

}  // namespace cli_detail

/// Command-line front end. `args` excludes the program name. All structured
/// output goes to `out`, diagnostics to `err`; the return value follows the
/// exit-code contract above.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hermitian self-dual GRS code constructor, verifier and classifier"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed,
                   "seed for randomized subcommands (every current subcommand is deterministic, so "
                   "output does not depend on it)");

    int status = exit_ok;

    struct FieldArgs {
        std::uint32_t p = 0, m = 1;
        bool json = false;
    };

    const auto add_field_options = [](CLI::App* sub, FieldArgs& fa) {
        sub->add_option("--p", fa.p, "characteristic (prime)")->required();
        sub->add_option("--m", fa.m, "extension degree, q = p^m")->default_val(1U);
        sub->add_flag("--json", fa.json, "machine-readable JSON output");
    };

    // --- field-info ---------------------------------------------------
    {
        auto fa = std::make_shared<FieldArgs>();
        CLI::App* sub = app.add_subcommand("field-info", "print the canonical tower F_p in F_q in F_{q^2}");
        add_field_options(sub, *fa);
        sub->callback([fa, &out]() {
            const FieldTower t = build_tower(fa->p, fa->m);
            if (fa->json) {
                nlohmann::json j;
                j["p"] = t.p();
                j["m"] = t.m();
                j["q"] = t.q();
                j["q2"] = t.q2();
                j["base_modulus"] = t.base_modulus();
                j["top_modulus"] = t.top_modulus();
                j["generator"] = t.generator().index();
                j["theta"] = t.theta().index();
                out << j.dump(2) << "\n";
                return;
            }
            out << "field tower: p = " << t.p() << ", m = " << t.m() << ", q = " << t.q() << ", q^2 = " << t.q2()
                << "\n";
            out << "base_modulus = " << cli_detail::index_list(t.base_modulus())
                << "  (monic over F_p, low degree first)\n";
            out << "top_modulus  = " << cli_detail::index_list(t.top_modulus())
                << "  (F_q indices {c, b, 1} for y^2 + b*y + c)\n";
            out << "generator    = " << t.generator().index() << "\n";
            out << "theta        = " << t.theta().index() << "  (element index of the top-modulus root)\n";
        });
    }

    // --- s1 / s2 ------------------------------------------------------
    struct SetArgs : FieldArgs {
        std::uint32_t a = 0, b = 0;
    };
    for (const bool is_line : {true, false}) {
        auto sa = std::make_shared<SetArgs>();
        CLI::App* sub = app.add_subcommand(is_line ? "s1" : "s2",
                                           is_line ? "solution set of x^q = a*x + b"
                                                   : "solution set of (x+a)^{q+1} = b");
        add_field_options(sub, *sa);
        sub->add_option("--a", sa->a, "element index of a")->required();
        sub->add_option("--b", sa->b, "element index of b")->required();
        sub->callback([sa, is_line, &out]() {
            const FieldTower t = build_tower(sa->p, sa->m);
            t.require_element(Elt(sa->a));
            t.require_element(Elt(sa->b));
            const FamilySpec spec{is_line ? FamilyKind::line : FamilyKind::norm, Elt(sa->a), Elt(sa->b)};
            const std::vector<Elt> set = family_roots(t, spec);
            cli_detail::print_family_set(out, is_line ? "S1" : "S2", t, spec.a, spec.b, set,
                                         family_valid(t, spec), sa->json);
        });
    }

    // --- construct1 / construct2 ---------------------------------------
    struct ConstructArgs : FieldArgs {
        std::vector<std::uint32_t> alpha;
        std::uint32_t a = 0, b = 0;
        std::size_t n = 0;
        std::uint32_t lambda = 0;
        bool mindist = false;
        std::string out_path;
    };
    {
        auto ca = std::make_shared<ConstructArgs>();
        CLI::App* sub = app.add_subcommand("construct1", "build a Hermitian self-dual code from a LINE family");
        add_field_options(sub, *ca);
        sub->add_option("--alpha", ca->alpha, "evaluation point indices (comma separated)")->delimiter(',');
        CLI::Option* opt_a = sub->add_option("--a", ca->a, "family parameter a (element index)");
        CLI::Option* opt_b = sub->add_option("--b", ca->b, "family parameter b (element index)");
        CLI::Option* opt_n = sub->add_option("--n", ca->n, "take the first n family elements as alpha");
        CLI::Option* opt_l = sub->add_option("--lambda", ca->lambda, "fixed lambda (element index)");
        sub->add_flag("--mindist", ca->mindist, "record the brute-force minimum distance");
        sub->add_option("--out", ca->out_path, "write the code document JSON to this file");
        sub->callback([ca, opt_a, opt_b, opt_n, opt_l, &out, &err]() {
            const cli_detail::Caps caps = cli_detail::caps_from_env();
            const FieldTower t = build_tower(ca->p, ca->m);
            std::optional<FamilySpec> family;
            if (opt_a->count() || opt_b->count()) {
                if (!opt_a->count() || !opt_b->count()) fail(Errc::bad_argument, "--a and --b come together");
                family = FamilySpec{FamilyKind::line, Elt(ca->a), Elt(ca->b)};
            }
            std::vector<Elt> alpha = detail::elements_of(ca->alpha);
            if (alpha.empty()) {
                if (!family || !opt_n->count())
                    fail(Errc::bad_argument, "need --alpha, or --a/--b/--n to pick family elements");
                const std::vector<Elt> roots = family_roots(t, *family);
                if (!family_valid(t, *family) || roots.size() < ca->n)
                    fail(Errc::not_in_family, "family does not hold n distinct points");
                alpha.assign(roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(ca->n));
            }
            std::optional<Elt> lambda;
            if (opt_l->count()) lambda = Elt(ca->lambda);
            ConstructionResult result = construction1(t, alpha, lambda, family);
            if (ca->mindist) cli_detail::attach_mds(result.certificate, result.code, caps.enumeration, err);
            Provenance prov{"construction1", {{"n", alpha.size()}, {"lambda", result.certificate.lambda.index()}}};
            if (const auto line = family ? family : line_family_through(t, alpha)) {
                prov.parameters["a"] = line->a.index();
                prov.parameters["b"] = line->b.index();
            }
            cli_detail::emit_document(out, err, t, make_document(result.code, result.certificate, std::move(prov)),
                                      ca->json, ca->out_path);
        });
    }
    {
        auto ca = std::make_shared<ConstructArgs>();
        CLI::App* sub = app.add_subcommand("construct2", "build a Hermitian self-dual code from a NORM family");
        add_field_options(sub, *ca);
        sub->add_option("--a", ca->a, "family parameter a (element index)")->required();
        sub->add_option("--b", ca->b, "family parameter b (element index)")->required();
        sub->add_option("--alpha", ca->alpha, "evaluation point indices (comma separated)")->delimiter(',');
        CLI::Option* opt_n = sub->add_option("--n", ca->n, "take the first n family elements as alpha");
        sub->add_flag("--mindist", ca->mindist, "record the brute-force minimum distance");
        sub->add_option("--out", ca->out_path, "write the code document JSON to this file");
        sub->callback([ca, opt_n, &out, &err]() {
            const cli_detail::Caps caps = cli_detail::caps_from_env();
            const FieldTower t = build_tower(ca->p, ca->m);
            const Elt a(ca->a), b(ca->b);
            t.require_element(a);
            t.require_element(b);
            std::vector<Elt> alpha = detail::elements_of(ca->alpha);
            if (alpha.empty()) {
                if (!opt_n->count()) fail(Errc::bad_argument, "need --alpha or --n");
                const std::vector<Elt> roots = s2_set(t, a, b);
                if (roots.size() < ca->n) fail(Errc::not_in_family, "family does not hold n distinct points");
                alpha.assign(roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(ca->n));
            }
            ConstructionResult result = construction2(t, a, b, alpha);
            if (ca->mindist) cli_detail::attach_mds(result.certificate, result.code, caps.enumeration, err);
            const Provenance prov{"construction2",
                                  {{"a", a.index()}, {"b", b.index()}, {"n", alpha.size()}}};
            cli_detail::emit_document(out, err, t, make_document(result.code, result.certificate, prov), ca->json,
                                      ca->out_path);
        });
    }

    // --- verify ---------------------------------------------------------
    struct InArgs {
        std::string in_path;
        std::uint32_t p = 0, m = 0;
        bool json = false;
    };
    const auto add_in_options = [](CLI::App* sub, InArgs& ia) {
        sub->add_option("--in", ia.in_path, "code document JSON file")->required();
        sub->add_option("--p", ia.p, "cross-check: document must use this characteristic");
        sub->add_option("--m", ia.m, "cross-check: document must use this extension degree");
        sub->add_flag("--json", ia.json, "machine-readable JSON output");
    };
    const auto checked_document = [](const InArgs& ia) {
        const CodeDocument doc = cli_detail::read_document(ia.in_path);
        if ((ia.p != 0 && ia.p != doc.p) || (ia.m != 0 && ia.m != doc.m))
            fail(Errc::bad_argument, "document field parameters do not match --p/--m");
        return doc;
    };
    {
        auto ia = std::make_shared<InArgs>();
        CLI::App* sub = app.add_subcommand("verify", "re-derive every claim in a code document");
        add_in_options(sub, *ia);
        sub->callback([ia, checked_document, &out, &err, &status]() {
            const cli_detail::Caps caps = cli_detail::caps_from_env();
            const CodeDocument doc = checked_document(*ia);
            const FieldTower t = build_tower(doc.p, doc.m);
            const VerifyOutcome outcome = verify_document(t, doc, caps.enumeration);
            if (ia->json) {
                out << nlohmann::json{{"ok", outcome.ok}, {"diagnostics", outcome.diagnostics}}.dump(2) << "\n";
            } else {
                out << (outcome.ok ? "verified: certificate holds" : "FAILED: certificate does not hold") << "\n";
            }
            for (const auto& diag : outcome.diagnostics) err << diag << "\n";
            status = outcome.ok ? exit_ok : exit_verification;
        });
    }

    // --- mindist ---------------------------------------------------------
    {
        auto ia = std::make_shared<InArgs>();
        CLI::App* sub = app.add_subcommand("mindist", "brute-force minimum distance of a documented code");
        add_in_options(sub, *ia);
        sub->callback([ia, checked_document, &out, &status]() {
            const cli_detail::Caps caps = cli_detail::caps_from_env();
            const CodeDocument doc = checked_document(*ia);
            const FieldTower t = build_tower(doc.p, doc.m);
            const GrsCode code = realize_code(t, doc);
            const std::size_t d = min_distance_bruteforce(code, caps.enumeration);
            const std::size_t singleton = code.n() - code.k() + 1;
            if (ia->json)
                out << nlohmann::json{{"min_distance", d}, {"singleton", singleton}, {"mds", d == singleton}}.dump(2)
                    << "\n";
            else
                out << "min_distance = " << d << ", n-k+1 = " << singleton
                    << (d == singleton ? " (MDS)" : " (NOT MDS)") << "\n";
            status = d == singleton ? exit_ok : exit_verification;
        });
    }

    // --- theorem7 ----------------------------------------------------------
    {
        auto ia = std::make_shared<InArgs>();
        CLI::App* sub = app.add_subcommand("theorem7", "run the degree criterion against the gram matrix");
        add_in_options(sub, *ia);
        sub->callback([ia, checked_document, &out, &err, &status]() {
            const CodeDocument doc = checked_document(*ia);
            const FieldTower t = build_tower(doc.p, doc.m);
            const GrsCode code = realize_code(t, doc);
            const bool criterion = theorem7_check(code);
            const bool gram = is_hermitian_self_dual(code);
            if (ia->json)
                out << nlohmann::json{{"theorem7", criterion}, {"gram_zero", gram}, {"agree", criterion == gram}}
                           .dump(2)
                    << "\n";
            else
                out << "degree criterion: " << (criterion ? "true" : "false")
                    << ", gram route: " << (gram ? "true" : "false") << "\n";
            if (criterion != gram) err << "DEFECT: the two self-duality routes disagree\n";
            status = (criterion && gram) ? exit_ok : exit_verification;
        });
    }

    // --- classify -----------------------------------------------------------
    struct ClassifyArgs : FieldArgs {
        std::size_t n = 0;
        std::size_t jobs = 1;
    };
    {
        auto cla = std::make_shared<ClassifyArgs>();
        CLI::App* sub = app.add_subcommand("classify", "exhaustively classify admissible n-subsets of F_{q^2}");
        add_field_options(sub, *cla);
        sub->add_option("--n", cla->n, "subset size (even)")->required();
        sub->add_option("--jobs", cla->jobs, "parallel workers")->default_val(std::size_t{1});
        sub->callback([cla, &out, &status]() {
            const cli_detail::Caps caps = cli_detail::caps_from_env();
            const FieldTower t = build_tower(cla->p, cla->m);
            const ClassReport report = classify(t, cla->n, cla->jobs, caps.subsets, caps.enumeration);
            if (cla->json) {
                out << report_to_json(report).dump(2) << "\n";
            } else {
                out << "classify q = " << report.q << ", n = " << report.n << ": " << report.total_subsets
                    << " subsets, " << report.admissible.size() << " admissible (LINE " << report.line_matched
                    << ", NORM " << report.norm_matched << ", unmatched " << report.unmatched << ")\n";
                for (const auto& entry : report.admissible) {
                    out << "  alpha = " << cli_detail::elt_list(entry.alpha)
                        << "  witness = " << cli_detail::elt_list(entry.witness) << "  families:";
                    if (entry.families.empty()) out << " NONE (violation)";
                    for (const auto& spec : entry.families)
                        out << " " << family_kind_name(spec.kind) << "(a=" << spec.a.index()
                            << ",b=" << spec.b.index() << ")";
                    out << "\n";
                }
                out << "violations: " << report.violations().size() << "\n";
            }
            status = report.violations().empty() ? exit_ok : exit_verification;
        });
    }

    // --- export-table ----------------------------------------------------------
    struct ExportArgs : FieldArgs {
        std::size_t n = 0;
        std::string kind = "both";
        bool mindist = false;
        std::string out_path;
    };
    {
        auto ea = std::make_shared<ExportArgs>();
        CLI::App* sub = app.add_subcommand("export-table",
                                           "one code document per feasible (family, a, b) at length n");
        add_field_options(sub, *ea);
        sub->add_option("--n", ea->n, "code length (even)")->required();
        sub->add_option("--kind", ea->kind, "line, norm or both")
            ->check(CLI::IsMember({"line", "norm", "both"}))
            ->default_val(std::string("both"));
        sub->add_flag("--mindist", ea->mindist, "record brute-force minimum distances");
        sub->add_option("--out", ea->out_path, "write the JSON table to this file");
        sub->callback([ea, &out, &err]() {
            const cli_detail::Caps caps = cli_detail::caps_from_env();
            const FieldTower t = build_tower(ea->p, ea->m);
            if (ea->n < 2 || ea->n % 2 != 0) fail(Errc::bad_argument, "--n must be even and at least 2");
            nlohmann::json table = nlohmann::json::array();
            std::size_t feasible = 0, infeasible = 0;
            struct Row {
                const char* kind;
                std::uint32_t a, b;
                bool ok;
                std::string note;
            };
            std::vector<Row> rows;
            const auto consider = [&](const FamilySpec& spec) {
                const std::vector<Elt> roots = family_roots(t, spec);
                if (roots.size() < ea->n) return;
                const std::vector<Elt> alpha(roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(ea->n));
                try {
                    ConstructionResult result =
                        spec.kind == FamilyKind::line
                            ? construction1(t, alpha, std::nullopt, spec)
                            : construction2(t, spec.a, spec.b, alpha);
                    if (ea->mindist) cli_detail::attach_mds(result.certificate, result.code, caps.enumeration, err);
                    Provenance prov{spec.kind == FamilyKind::line ? "construction1" : "construction2",
                                    {{"a", spec.a.index()}, {"b", spec.b.index()}, {"n", ea->n}}};
                    if (spec.kind == FamilyKind::line)
                        prov.parameters["lambda"] = result.certificate.lambda.index();
                    table.push_back(document_to_json(make_document(result.code, result.certificate, prov)));
                    rows.push_back({family_kind_name(spec.kind), spec.a.index(), spec.b.index(), true, ""});
                    ++feasible;
                } catch (const Error& e) {
                    if (e.code() != Errc::no_feasible_lambda && e.code() != Errc::norm_infeasible) throw;
                    rows.push_back({family_kind_name(spec.kind), spec.a.index(), spec.b.index(), false, e.what()});
                    ++infeasible;
                }
            };
            if (ea->kind != "norm")
                for (std::uint32_t a = 0; a < t.q2(); ++a) {
                    if (t.pow(Elt(a), t.q() + 1) != Elt(1)) continue;
                    for (std::uint32_t b = 0; b < t.q2(); ++b) {
                        const FamilySpec spec{FamilyKind::line, Elt(a), Elt(b)};
                        if (family_valid(t, spec)) consider(spec);
                    }
                }
            if (ea->kind != "line")
                for (std::uint32_t a = 0; a < t.q2(); ++a)
                    for (std::uint32_t b = 1; b < t.q(); ++b) {
                        const FamilySpec spec{FamilyKind::norm, Elt(a), Elt(b)};
                        if (family_valid(t, spec)) consider(spec);
                    }
            const std::string text = table.dump(2) + "\n";
            if (!ea->out_path.empty()) cli_detail::write_json_file(ea->out_path, text);
            if (ea->json) {
                out << text;
            } else {
                out << "export-table q = " << t.q() << ", n = " << ea->n << ": " << feasible << " codes, "
                    << infeasible << " infeasible family entries\n";
                for (const auto& row : rows)
                    out << "  " << row.kind << " a=" << row.a << " b=" << row.b << " -> "
                        << (row.ok ? "ok" : ("infeasible: " + row.note)) << "\n";
            }
        });
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "run with --help for the accepted grammar\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return cli_detail::exit_code_for(e.code());
    } catch (const std::logic_error& e) {
        err << "internal defect: " << e.what() << "\n";
        return exit_verification;
    }
    return status;
}

}  // namespace hermgrs

#endif
