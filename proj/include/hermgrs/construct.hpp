#ifndef HERMGRS_CONSTRUCT_HPP
#define HERMGRS_CONSTRUCT_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermgrs/grs.hpp"

namespace hermgrs {

/// The two admissible shapes of evaluation-point sets. LINE is the solution
/// set of x^q = a·x + b (valid only when a^{q+1} = 1 and b^q + a^q·b = 0, in
/// which case it has q elements); NORM is the solution set of
/// (x+a)^{q+1} = b (q+1 elements when b ∈ F_q*).
enum class FamilyKind { line, norm };

struct FamilySpec {
    FamilyKind kind;
    Elt a;
    Elt b;
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Whether the family's defining equation has a root set large enough to
/// host codes: the LINE conditions above, or b ∈ F_q* for NORM.
inline bool family_valid(const FieldTower& t, const FamilySpec& spec) {
    if (spec.kind == FamilyKind::line) {
        const bool a_cond = t.pow(spec.a, t.q() + 1) == Elt(1);
        const bool b_cond = t.add(t.frobenius(spec.b), t.mul(t.frobenius(spec.a), spec.b)) == Elt(0);
        return a_cond && b_cond;
    }
    return spec.b != Elt(0) && t.is_in_base_field(spec.b);
}

/// All solutions of x^q = a·x + b, ascending, by exhaustive scan.
inline std::vector<Elt> s1_set(const FieldTower& t, Elt a, Elt b) {
    std::vector<Elt> out;
    for (std::uint32_t i = 0; i < t.q2(); ++i) {
        const Elt x(i);
        if (t.frobenius(x) == t.add(t.mul(a, x), b)) out.push_back(x);
    }
    return out;
}

/// All solutions of (x+a)^{q+1} = b, ascending, by exhaustive scan.
inline std::vector<Elt> s2_set(const FieldTower& t, Elt a, Elt b) {
    std::vector<Elt> out;
    for (std::uint32_t i = 0; i < t.q2(); ++i) {
        const Elt x(i);
        if (t.norm(t.add(x, a)) == b) out.push_back(x);
    }
    return out;
}

inline std::vector<Elt> family_roots(const FieldTower& t, const FamilySpec& spec) {
    return spec.kind == FamilyKind::line ? s1_set(t, spec.a, spec.b) : s2_set(t, spec.a, spec.b);
}

namespace detail {

inline bool contains_all(std::span<const Elt> haystack, std::span<const Elt> needles) {
    for (const Elt x : needles)
        if (std::find(haystack.begin(), haystack.end(), x) == haystack.end()) return false;
    return true;
}

}  // namespace detail

/// The unique valid LINE spec whose root set contains all the given points,
/// if one exists. Two points pin (a, b) through the 2×2 linear solve
/// α_1^q = a·α_1 + b, α_2^q = a·α_2 + b; the remaining points and the
/// validity conditions are then verified.
inline std::optional<FamilySpec> line_family_through(const FieldTower& t, std::span<const Elt> alpha) {
    if (alpha.size() < 2) return std::nullopt;
    const Elt a = t.div(t.sub(t.frobenius(alpha[0]), t.frobenius(alpha[1])), t.sub(alpha[0], alpha[1]));
    const Elt b = t.sub(t.frobenius(alpha[0]), t.mul(a, alpha[0]));
    const FamilySpec spec{FamilyKind::line, a, b};
    if (!family_valid(t, spec)) return std::nullopt;
    for (const Elt x : alpha)
        if (t.frobenius(x) != t.add(t.mul(a, x), b)) return std::nullopt;
    return spec;
}

/// Every valid NORM spec whose root set contains all the given points,
/// ascending in a. For each shift a the candidate b = (α_1+a)^{q+1} is
/// forced, so the scan over a is complete.
inline std::vector<FamilySpec> norm_families_containing(const FieldTower& t, std::span<const Elt> alpha) {
    std::vector<FamilySpec> out;
    if (alpha.empty()) return out;
    for (std::uint32_t ai = 0; ai < t.q2(); ++ai) {
        const Elt a(ai);
        const Elt b = t.norm(t.add(alpha[0], a));
        const FamilySpec spec{FamilyKind::norm, a, b};
        if (!family_valid(t, spec)) continue;
        bool all = true;
        for (const Elt x : alpha) all = all && t.norm(t.add(x, a)) == b;
        if (all) out.push_back(spec);
    }
    return out;
}

/// Outcome of a construction: the code plus the proof object for its
/// self-duality.
struct ConstructionResult {
    GrsCode code;
    Certificate certificate;
};

/// The degree criterion for Hermitian self-duality: with
/// f interpolating v_i^{q+1}/u_i, m interpolating α_i^q, and
/// G(x) = ∏(x−α_i), the code is Hermitian self-dual iff
/// deg(f·m^i mod G) ≤ k−1 for i = 0..k−1. Must agree with the gram route on
/// every input.
inline bool theorem7_check(const GrsCode& c) {
    if (c.n() != 2 * c.k()) fail(Errc::not_even, "degree criterion needs n = 2k");
    const FieldTower& t = c.tower();
    const std::vector<Elt> u = u_vector(c);
    std::vector<std::pair<Elt, Elt>> f_points(c.n()), m_points(c.n());
    for (std::size_t i = 0; i < c.n(); ++i) {
        f_points[i] = {c.alpha()[i], t.div(t.norm(c.v()[i]), u[i])};
        m_points[i] = {c.alpha()[i], t.frobenius(c.alpha()[i])};
    }
    const Poly m = interpolate(t, m_points);
    const Poly G = from_roots(t, c.alpha());
    Poly cur = interpolate(t, f_points);
    for (std::size_t i = 0; i < c.k(); ++i) {
        cur = mod_reduce(cur, G);
        if (!cur.degree_at_most(c.k() - 1)) return false;
        cur = cur * m;
    }
    return true;
}

namespace detail {

inline Certificate finish_certificate(GrsCode& code, Certificate cert, const char* recipe) {
    cert.gram_zero = is_hermitian_self_dual(code);
    if (!cert.gram_zero)
        fail(Errc::verification_failed,
             std::string(recipe) + " produced a code with nonzero gram matrix; this contradicts the recipe");
    cert.theorem7_ok = theorem7_check(code);
    internal_check(cert.theorem7_ok, "degree criterion disagrees with a zero gram matrix");
    return cert;
}

}  // namespace detail

/// First recipe: evaluation points inside a LINE family. Searches the
/// smallest λ (ascending index) with λ·u_i ∈ F_q* for every i, then picks
/// v_i as the smallest-index solution of v^{q+1} = λ·u_i. The returned
/// certificate carries λ and the verified gram/degree-criterion flags.
inline ConstructionResult construction1(const FieldTower& t, std::span<const Elt> alpha,
                                        std::optional<Elt> lambda = std::nullopt,
                                        std::optional<FamilySpec> family = std::nullopt) {
    const std::size_t n = alpha.size();
    if (n < 2 || n % 2 != 0) fail(Errc::not_even, "need an even number n >= 2 of evaluation points");
    if (family) {
        if (family->kind != FamilyKind::line || !family_valid(t, *family) ||
            !detail::contains_all(family_roots(t, *family), alpha))
            fail(Errc::not_in_family, "evaluation points are not contained in the given LINE family");
    } else if (!line_family_through(t, alpha)) {
        fail(Errc::not_in_family, "evaluation points lie in no valid LINE family");
    }
    const std::vector<Elt> u = u_vector(t, alpha);
    const auto feasible = [&](Elt cand) {
        for (const Elt ui : u) {
            const Elt w = t.mul(cand, ui);
            if (w == Elt(0) || !t.is_in_base_field(w)) return false;
        }
        return true;
    };
    Elt chosen(0);
    if (lambda) {
        if (*lambda == Elt(0) || !feasible(*lambda))
            fail(Errc::no_feasible_lambda, "given lambda does not place every lambda*u_i in F_q*");
        chosen = *lambda;
    } else {
        bool found = false;
        for (std::uint32_t i = 1; i < t.q2() && !found; ++i)
            if (feasible(Elt(i))) {
                chosen = Elt(i);
                found = true;
            }
        if (!found) fail(Errc::no_feasible_lambda, "no lambda places every lambda*u_i in F_q*");
    }
    std::vector<Elt> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<Elt> fiber = t.solve_norm(t.mul(chosen, u[i]));
        internal_check(!fiber.empty(), "norm fiber of a base-field unit is empty");
        v[i] = fiber.front();
    }
    GrsCode code(t, n / 2, {alpha.begin(), alpha.end()}, std::move(v));
    Certificate cert;
    cert.u = u;
    cert.witness_kind = Certificate::Witness::lambda;
    cert.lambda = chosen;
    cert = detail::finish_certificate(code, std::move(cert), "construction1");
    return {std::move(code), std::move(cert)};
}

/// Second recipe: evaluation points inside the NORM family (x+a)^{q+1} = b,
/// with g(x) = (x+a)^{k−1} and v_i^{q+1} = g(α_i)·u_i. Every product
/// g(α_i)·u_i must land in F_q* for the norm preimages to exist; when one
/// does not, the recipe is infeasible for this point set and NormInfeasible
/// is raised.
inline ConstructionResult construction2(const FieldTower& t, Elt a, Elt b, std::span<const Elt> alpha) {
    const std::size_t n = alpha.size();
    if (n < 2 || n % 2 != 0) fail(Errc::not_even, "need an even number n >= 2 of evaluation points");
    const std::vector<Elt> roots = s2_set(t, a, b);
    if (!family_valid(t, {FamilyKind::norm, a, b}) || !detail::contains_all(roots, alpha))
        fail(Errc::not_in_family, "evaluation points are not contained in the NORM family of (a, b)");
    const std::size_t k = n / 2;
    const std::vector<Elt> u = u_vector(t, alpha);
    Poly g = Poly::constant(t, Elt(1));
    for (std::size_t i = 0; i + 1 < k; ++i) g = g * Poly(t, {a, Elt(1)});
    std::vector<Elt> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Elt w = t.mul(g.eval(alpha[i]), u[i]);
        if (w == Elt(0) || !t.is_in_base_field(w))
            fail(Errc::norm_infeasible,
                 "g(alpha_" + std::to_string(i) + ")*u_" + std::to_string(i) + " lies outside F_q*");
        v[i] = t.solve_norm(w).front();
    }
    GrsCode code(t, k, {alpha.begin(), alpha.end()}, std::move(v));
    Certificate cert;
    cert.u = u;
    cert.witness_kind = Certificate::Witness::poly_g;
    cert.g_coeffs = g.coeffs();
    cert = detail::finish_certificate(code, std::move(cert), "construction2");
    return {std::move(code), std::move(cert)};
}

}  // namespace hermgrs

#endif
