#ifndef HERMGRS_DOCUMENT_HPP
#define HERMGRS_DOCUMENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermgrs/search.hpp"

namespace hermgrs {

inline constexpr int document_schema_version = 1;

/// Where a documented code came from: the recipe name plus its integer
/// parameters (element indices and sizes).
struct Provenance {
    std::string construction = "manual";
    std::map<std::string, std::uint64_t> parameters;
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Flat, integer-only description of a code plus its certificate. This is
/// the interchange schema: every element is its canonical index, moduli are
/// coefficient lists, and serialization is canonical (sorted keys, no
/// floating point), so a parse/serialize round trip is byte-identical.
struct CodeDocument {
    int schema_version = document_schema_version;
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::vector<std::uint32_t> base_modulus;
    std::vector<std::uint32_t> top_modulus;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::vector<std::uint32_t> alpha;
    std::vector<std::uint32_t> v;
    std::vector<std::uint32_t> u;
    std::string witness_kind = "none";  // "none" | "lambda" | "poly"
    std::uint32_t lambda = 0;           // meaningful when witness_kind == "lambda"
    std::vector<std::uint32_t> g;       // meaningful when witness_kind == "poly"
    bool gram_zero = false;
    bool theorem7_ok = false;
    std::optional<std::uint64_t> mds_checked;
    Provenance provenance;
    friend bool operator==(const CodeDocument&, const CodeDocument&) = default;
};

inline const char* family_kind_name(FamilyKind kind) { return kind == FamilyKind::line ? "LINE" : "NORM"; }

namespace detail {

inline std::vector<std::uint32_t> indices_of(const std::vector<Elt>& elems) {
    std::vector<std::uint32_t> out;
    out.reserve(elems.size());
    for (const Elt e : elems) out.push_back(e.index());
    return out;
}

inline std::vector<Elt> elements_of(const std::vector<std::uint32_t>& idx) {
    std::vector<Elt> out;
    out.reserve(idx.size());
    for (const std::uint32_t i : idx) out.push_back(Elt(i));
    return out;
}

template <typename T>
T json_get(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) fail(Errc::bad_document, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        fail(Errc::bad_document, std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace detail

inline CodeDocument make_document(const GrsCode& code, const Certificate& cert, Provenance provenance) {
    const FieldTower& t = code.tower();
    CodeDocument doc;
    doc.p = t.p();
    doc.m = t.m();
    doc.base_modulus = t.base_modulus();
    doc.top_modulus = t.top_modulus();
    doc.n = code.n();
    doc.k = code.k();
    doc.alpha = detail::indices_of(code.alpha());
    doc.v = detail::indices_of(code.v());
    doc.u = detail::indices_of(cert.u);
    switch (cert.witness_kind) {
        case Certificate::Witness::lambda:
            doc.witness_kind = "lambda";
            doc.lambda = cert.lambda.index();
            break;
        case Certificate::Witness::poly_g:
            doc.witness_kind = "poly";
            doc.g = detail::indices_of(cert.g_coeffs);
            break;
        case Certificate::Witness::none:
            doc.witness_kind = "none";
            break;
    }
    doc.gram_zero = cert.gram_zero;
    doc.theorem7_ok = cert.theorem7_ok;
    if (cert.mds_checked) doc.mds_checked = *cert.mds_checked;
    doc.provenance = std::move(provenance);
    return doc;
}

inline nlohmann::json document_to_json(const CodeDocument& doc) {
    nlohmann::json witness;
    witness["kind"] = doc.witness_kind;
    if (doc.witness_kind == "lambda") witness["lambda"] = doc.lambda;
    if (doc.witness_kind == "poly") witness["g"] = doc.g;
    nlohmann::json certificate;
    certificate["gram_zero"] = doc.gram_zero;
    certificate["theorem7_ok"] = doc.theorem7_ok;
    certificate["witness"] = witness;
    if (doc.mds_checked) certificate["mds_checked"] = *doc.mds_checked;
    nlohmann::json j;
    j["schema_version"] = doc.schema_version;
    j["p"] = doc.p;
    j["m"] = doc.m;
    j["base_modulus"] = doc.base_modulus;
    j["top_modulus"] = doc.top_modulus;
    j["n"] = doc.n;
    j["k"] = doc.k;
    j["alpha"] = doc.alpha;
    j["v"] = doc.v;
    j["u"] = doc.u;
    j["certificate"] = certificate;
    j["provenance"] = {{"construction", doc.provenance.construction}, {"parameters", doc.provenance.parameters}};
    return j;
}

inline CodeDocument document_from_json(const nlohmann::json& j) {
    CodeDocument doc;
    doc.schema_version = detail::json_get<int>(j, "schema_version");
    if (doc.schema_version != document_schema_version)
        fail(Errc::bad_document, "unsupported schema_version " + std::to_string(doc.schema_version));
    doc.p = detail::json_get<std::uint32_t>(j, "p");
    doc.m = detail::json_get<std::uint32_t>(j, "m");
    doc.base_modulus = detail::json_get<std::vector<std::uint32_t>>(j, "base_modulus");
    doc.top_modulus = detail::json_get<std::vector<std::uint32_t>>(j, "top_modulus");
    doc.n = detail::json_get<std::uint64_t>(j, "n");
    doc.k = detail::json_get<std::uint64_t>(j, "k");
    doc.alpha = detail::json_get<std::vector<std::uint32_t>>(j, "alpha");
    doc.v = detail::json_get<std::vector<std::uint32_t>>(j, "v");
    doc.u = detail::json_get<std::vector<std::uint32_t>>(j, "u");
    const nlohmann::json cert = detail::json_get<nlohmann::json>(j, "certificate");
    const nlohmann::json witness = detail::json_get<nlohmann::json>(cert, "witness");
    doc.witness_kind = detail::json_get<std::string>(witness, "kind");
    if (doc.witness_kind == "lambda")
        doc.lambda = detail::json_get<std::uint32_t>(witness, "lambda");
    else if (doc.witness_kind == "poly")
        doc.g = detail::json_get<std::vector<std::uint32_t>>(witness, "g");
    else if (doc.witness_kind != "none")
        fail(Errc::bad_document, "unknown witness kind '" + doc.witness_kind + "'");
    doc.gram_zero = detail::json_get<bool>(cert, "gram_zero");
    doc.theorem7_ok = detail::json_get<bool>(cert, "theorem7_ok");
    if (cert.contains("mds_checked")) doc.mds_checked = detail::json_get<std::uint64_t>(cert, "mds_checked");
    const nlohmann::json prov = detail::json_get<nlohmann::json>(j, "provenance");
    doc.provenance.construction = detail::json_get<std::string>(prov, "construction");
    doc.provenance.parameters = detail::json_get<std::map<std::string, std::uint64_t>>(prov, "parameters");
    return doc;
}

inline std::string document_to_string(const CodeDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

inline CodeDocument document_from_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::bad_document, std::string("JSON parse error: ") + e.what());
    }
    return document_from_json(j);
}

/// Checks that the document's field description matches the canonical tower
/// for (p, m); anything else cannot be realized faithfully.
inline void check_document_tower(const FieldTower& t, const CodeDocument& doc) {
    if (doc.p != t.p() || doc.m != t.m()) fail(Errc::bad_document, "document (p, m) does not match tower");
    if (doc.base_modulus != t.base_modulus())
        fail(Errc::bad_document, "document base_modulus is not the canonical modulus");
    if (doc.top_modulus != t.top_modulus())
        fail(Errc::bad_document, "document top_modulus is not the canonical modulus");
}

/// Rebuilds the code object described by the document over an existing tower.
inline GrsCode realize_code(const FieldTower& t, const CodeDocument& doc) {
    check_document_tower(t, doc);
    if (doc.alpha.size() != doc.n || doc.v.size() != doc.n)
        fail(Errc::bad_document, "alpha/v lengths disagree with n");
    return GrsCode(t, static_cast<std::size_t>(doc.k), detail::elements_of(doc.alpha), detail::elements_of(doc.v));
}

struct VerifyOutcome {
    bool ok = true;
    std::vector<std::string> diagnostics;
};

/// Re-derives everything the certificate claims: the u-vector, the gram
/// matrix (diagnosing "gram nonzero at (i, j)"), the degree criterion, the
/// witness equations, and (when present and within the cap) the recorded
/// minimum distance.
inline VerifyOutcome verify_document(const FieldTower& t, const CodeDocument& doc,
                                     std::uint64_t enum_cap = default_enum_cap) {
    VerifyOutcome outcome;
    const auto flag = [&outcome](std::string what) {
        outcome.ok = false;
        outcome.diagnostics.push_back(std::move(what));
    };
    GrsCode code = realize_code(t, doc);
    const std::vector<Elt> u = u_vector(code);
    if (detail::indices_of(u) != doc.u) flag("u vector does not match 1/G'(alpha_i)");
    const Mat gram = hermitian_gram(code);
    bool gram_zero = true;
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j)
            if (gram.at(i, j) != Elt(0)) {
                gram_zero = false;
                flag("gram nonzero at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            }
    const bool self_dual = code.n() == 2 * code.k() && gram_zero;
    if (doc.gram_zero != self_dual) flag("gram_zero flag disagrees with the recomputed gram matrix");
    if (code.n() == 2 * code.k()) {
        const bool t7 = theorem7_check(code);
        if (t7 != self_dual) flag("degree criterion disagrees with the gram matrix");
        if (doc.theorem7_ok != t7) flag("theorem7_ok flag disagrees with the recomputed criterion");
    } else {
        flag("n != 2k: the document cannot describe a Hermitian self-dual code");
    }
    if (doc.witness_kind == "lambda") {
        const Elt lambda(doc.lambda);
        t.require_element(lambda);
        for (std::size_t i = 0; i < code.n(); ++i)
            if (t.norm(code.v()[i]) != t.mul(lambda, u[i])) {
                flag("witness equation v_i^{q+1} = lambda*u_i fails at i = " + std::to_string(i));
                break;
            }
    } else if (doc.witness_kind == "poly") {
        const Poly g(t, detail::elements_of(doc.g));
        for (std::size_t i = 0; i < code.n(); ++i)
            if (t.norm(code.v()[i]) != t.mul(g.eval(code.alpha()[i]), u[i])) {
                flag("witness equation v_i^{q+1} = g(alpha_i)*u_i fails at i = " + std::to_string(i));
                break;
            }
    }
    if (doc.mds_checked) {
        try {
            const std::size_t d = min_distance_bruteforce(code, enum_cap);
            if (d != *doc.mds_checked) flag("recorded minimum distance disagrees with brute force");
        } catch (const Error& e) {
            if (e.code() != Errc::too_large_to_enumerate) throw;
            outcome.diagnostics.push_back("note: minimum distance re-check skipped (over enumeration cap)");
        }
    }
    return outcome;
}

inline nlohmann::json family_to_json(const FamilySpec& spec) {
    return {{"kind", family_kind_name(spec.kind)}, {"a", spec.a.index()}, {"b", spec.b.index()}};
}

inline nlohmann::json report_to_json(const ClassReport& report) {
    nlohmann::json j;
    j["q"] = report.q;
    j["n"] = report.n;
    j["total"] = report.total_subsets;
    j["admissible"] = nlohmann::json::array();
    for (const auto& entry : report.admissible) {
        nlohmann::json families = nlohmann::json::array();
        for (const auto& spec : entry.families) families.push_back(family_to_json(spec));
        j["admissible"].push_back({{"alpha", detail::indices_of(entry.alpha)},
                                   {"witness", detail::indices_of(entry.witness)},
                                   {"families", families}});
    }
    j["violations"] = nlohmann::json::array();
    for (const AdmissibleEntry* entry : report.violations())
        j["violations"].push_back(
            {{"alpha", detail::indices_of(entry->alpha)}, {"witness", detail::indices_of(entry->witness)}});
    return j;
}

}  // namespace hermgrs

#endif
