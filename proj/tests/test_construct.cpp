#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hermgrs/construct.hpp"
#include "test_support.hpp"

using namespace hermgrs;

namespace {

const FieldTower& f9() {
    static const FieldTower t = build_tower(3, 1);
    return t;
}

std::vector<Elt> fourth_roots() { return {Elt(1), Elt(2), Elt(3), Elt(6)}; }

// Independent membership oracle using only naive powers.
bool naive_in_s1(const FieldTower& t, Elt a, Elt b, Elt x) {
    return oracle::naive_pow(t, x, t.q()) == t.add(t.mul(a, x), b);
}

bool naive_in_s2(const FieldTower& t, Elt a, Elt b, Elt x) {
    return oracle::naive_pow(t, t.add(x, a), t.q() + 1) == b;
}

}  // namespace

TEST_CASE("s1 sets") {
    const FieldTower& t = f9();
    REQUIRE(s1_set(t, Elt(1), Elt(0)) == std::vector<Elt>{Elt(0), Elt(1), Elt(2)});
    REQUIRE(s1_set(t, Elt(0), Elt(0)) == std::vector<Elt>{Elt(0)});

    const auto skew = s1_set(t, t.theta(), Elt(0));
    REQUIRE(skew.size() == 3);
    REQUIRE(skew[0] == Elt(0));
    for (const Elt x : skew)
        if (x != Elt(0)) REQUIRE(t.mul(x, x) == t.theta());  // nonzero solutions square to theta

    for (const Elt x : s1_set(t, Elt(1), Elt(0))) REQUIRE(naive_in_s1(t, Elt(1), Elt(0), x));
}

TEST_CASE("valid s1 sets are cosets of a q-element subspace") {
    // x -> x^q - a*x is F_q-linear, so the solution set of x^q = a*x + b is a
    // translate of its kernel: differences from any base point form an
    // F_q-subspace of size q.
    for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {2, 2}, {5, 1}}) {
        const FieldTower t = build_tower(p, m);
        for (std::uint32_t a = 0; a < t.q2(); ++a)
            for (std::uint32_t b = 0; b < t.q2(); ++b) {
                if (!family_valid(t, {FamilyKind::line, Elt(a), Elt(b)})) continue;
                const auto set = s1_set(t, Elt(a), Elt(b));
                REQUIRE(set.size() == t.q());
                std::set<std::uint32_t> diffs;
                for (const Elt x : set) diffs.insert(t.sub(x, set.front()).index());
                REQUIRE(diffs.size() == t.q());
                REQUIRE(diffs.contains(0));
                // Closed under addition and under scaling by F_q.
                for (const std::uint32_t d1 : diffs) {
                    for (const std::uint32_t d2 : diffs) REQUIRE(diffs.contains(t.add(Elt(d1), Elt(d2)).index()));
                    for (std::uint32_t c = 0; c < t.q(); ++c)
                        REQUIRE(diffs.contains(t.mul(Elt(c), Elt(d1)).index()));
                }
            }
    }
}

TEST_CASE("s1 cardinality law is exactly the validity condition") {
    // |S1| > 1 iff a^{q+1} = 1 and b^q + a^q b = 0, and then |S1| = q.
    for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {2, 2}}) {
        const FieldTower t = build_tower(p, m);
        for (std::uint32_t a = 0; a < t.q2(); ++a)
            for (std::uint32_t b = 0; b < t.q2(); ++b) {
                const auto set = s1_set(t, Elt(a), Elt(b));
                const bool valid = family_valid(t, {FamilyKind::line, Elt(a), Elt(b)});
                REQUIRE((set.size() > 1) == valid);
                if (valid) REQUIRE(set.size() == t.q());
            }
    }
}

TEST_CASE("s2 sets") {
    const FieldTower& t = f9();
    REQUIRE(s2_set(t, Elt(0), Elt(1)) == fourth_roots());
    REQUIRE(s2_set(t, Elt(5), Elt(0)) == std::vector<Elt>{t.neg(Elt(5))});
    REQUIRE(s2_set(t, Elt(0), t.theta()).empty());
    for (const Elt x : s2_set(t, Elt(0), Elt(1))) REQUIRE(naive_in_s2(t, Elt(0), Elt(1), x));

    // Valid NORM specs always carve out q+1 points.
    for (std::uint32_t a = 0; a < t.q2(); ++a)
        for (std::uint32_t b = 1; b < t.q(); ++b) REQUIRE(s2_set(t, Elt(a), Elt(b)).size() == t.q() + 1);
}

TEST_CASE("construction1 builds the [2,1] code end to end") {
    const FieldTower& t = f9();
    const std::vector<Elt> alpha{Elt(0), Elt(1)};
    const ConstructionResult result = construction1(t, alpha);
    REQUIRE(result.certificate.u == std::vector<Elt>{Elt(2), Elt(1)});
    REQUIRE(result.certificate.witness_kind == Certificate::Witness::lambda);
    REQUIRE(result.certificate.lambda == Elt(1));
    REQUIRE(result.code.v() == std::vector<Elt>{t.solve_norm(Elt(2)).front(), t.solve_norm(Elt(1)).front()});
    REQUIRE(result.certificate.gram_zero);
    REQUIRE(result.certificate.theorem7_ok);
    REQUIRE(is_hermitian_self_dual(result.code));
    REQUIRE(min_distance_bruteforce(result.code) == 2);
}

TEST_CASE("construction1 error surface") {
    const FieldTower& t = f9();
    REQUIRE_ERRC(construction1(t, std::vector<Elt>{Elt(0), Elt(1), Elt(2)}), Errc::not_even);
    // Four points cannot sit in any LINE family at q = 3 (lines have q = 3 points).
    REQUIRE_ERRC(construction1(t, std::vector<Elt>{Elt(0), Elt(1), Elt(2), Elt(3)}), Errc::not_in_family);
    // An explicitly given family must contain the points.
    REQUIRE_ERRC(construction1(t, std::vector<Elt>{Elt(0), Elt(3)},
                               std::nullopt, FamilySpec{FamilyKind::line, Elt(1), Elt(0)}),
                 Errc::not_in_family);
    // theta * u_i leaves F_q for alpha = (0, 1), so this lambda is infeasible.
    REQUIRE_ERRC(construction1(t, std::vector<Elt>{Elt(0), Elt(1)}, t.theta()), Errc::no_feasible_lambda);
}

TEST_CASE("every 2-subset of S1(1, 0) admits some lambda") {
    const FieldTower& t = f9();
    const auto line = s1_set(t, Elt(1), Elt(0));
    REQUIRE(line.size() == 3);
    for (std::size_t i = 0; i < line.size(); ++i)
        for (std::size_t j = i + 1; j < line.size(); ++j) {
            const ConstructionResult r = construction1(t, std::vector<Elt>{line[i], line[j]});
            REQUIRE(is_hermitian_self_dual(r.code));
        }
}

TEST_CASE("construction2 builds the [4,2] code end to end") {
    const FieldTower& t = f9();
    const ConstructionResult result = construction2(t, Elt(0), Elt(1), fourth_roots());
    REQUIRE(result.code.n() == 4);
    REQUIRE(result.code.k() == 2);
    REQUIRE(result.certificate.u == fourth_roots());  // u_i = alpha_i here
    REQUIRE(result.certificate.witness_kind == Certificate::Witness::poly_g);
    REQUIRE(result.certificate.g_coeffs == std::vector<Elt>{Elt(0), Elt(1)});  // g = x + 0
    for (std::size_t i = 0; i < 4; ++i) {
        const Elt norm_v = t.norm(result.code.v()[i]);
        REQUIRE(t.is_in_base_field(norm_v));
        REQUIRE(norm_v == t.mul(fourth_roots()[i], fourth_roots()[i]));  // v_i^4 = alpha_i^2
    }
    REQUIRE(is_hermitian_self_dual(result.code));
    REQUIRE(min_distance_bruteforce(result.code) == 3);
}

TEST_CASE("construction2 error surface") {
    const FieldTower& t = f9();
    REQUIRE_ERRC(construction2(t, Elt(0), Elt(0), fourth_roots()), Errc::not_in_family);
    REQUIRE_ERRC(construction2(t, Elt(0), Elt(1), std::vector<Elt>{Elt(1), Elt(2), Elt(3)}), Errc::not_even);
    REQUIRE_ERRC(construction2(t, Elt(0), Elt(1), std::vector<Elt>{Elt(0), Elt(1)}), Errc::not_in_family);
    // b = 2 is a non-square in F_3*: g(alpha_i)*u_i = alpha_i^{-2} has
    // (g u)^{q-1} = b^{-1} != 1, so no norm preimage exists.
    REQUIRE_ERRC(construction2(t, Elt(0), Elt(2), s2_set(t, Elt(0), Elt(2))), Errc::norm_infeasible);
}

TEST_CASE("construction2 succeeds on a translated fiber") {
    const FieldTower& t = f9();
    const auto fiber = s2_set(t, t.theta(), Elt(1));
    REQUIRE(fiber.size() == 4);
    const ConstructionResult r = construction2(t, t.theta(), Elt(1), fiber);
    REQUIRE(is_hermitian_self_dual(r.code));
    REQUIRE(min_distance_bruteforce(r.code) == 3);
}

TEST_CASE("the b = 2 fiber hosts self-dual codes even though the recipe is infeasible") {
    // The set {alpha : alpha^4 = 2} admits a witness x with all coordinates in
    // F_3*, so self-dual codes over it exist; the fixed-scalar recipe just
    // cannot reach them. Verified end to end from the witnessed x.
    const FieldTower& t = f9();
    const auto fiber = s2_set(t, Elt(0), Elt(2));
    REQUIRE(fiber.size() == 4);
    // Hand-derived witness shape: x = (2, 2, 1, 1) after sorting the fiber
    // into conjugate pairs. Instead of freezing fiber order, solve the small
    // system here: x_i = 2 on the F_3-multiples of one root.
    std::vector<Elt> x;
    for (const Elt a : fiber) {
        // pair up: x = 2 where alpha is an F_3 multiple of fiber[0]
        const bool first_pair = a == fiber[0] || a == t.neg(fiber[0]);
        x.push_back(first_pair ? Elt(2) : Elt(1));
    }
    std::vector<Elt> v(4);
    for (std::size_t i = 0; i < 4; ++i) v[i] = t.solve_norm(x[i]).front();
    const GrsCode code(t, 2, fiber, v);
    REQUIRE(is_hermitian_self_dual(code));
    REQUIRE(theorem7_check(code));
}

TEST_CASE("theorem7_check matches the worked examples") {
    const FieldTower& t = f9();
    const Elt v2 = t.solve_norm(Elt(2)).front();
    REQUIRE(theorem7_check(GrsCode(t, 1, {Elt(0), Elt(1)}, {Elt(1), v2})));
    REQUIRE_FALSE(theorem7_check(GrsCode(t, 1, {Elt(0), Elt(1)}, {Elt(1), Elt(1)})));
    REQUIRE_ERRC(theorem7_check(GrsCode(t, 1, {Elt(0), Elt(1), Elt(2)}, {Elt(1), Elt(1), Elt(1)})),
                 Errc::not_even);

    // For the [4,2] code from the NORM recipe, the interpolated f is a scalar
    // multiple of g.
    const ConstructionResult r = construction2(t, Elt(0), Elt(1), fourth_roots());
    const std::vector<Elt> u = u_vector(r.code);
    std::vector<std::pair<Elt, Elt>> pts;
    for (std::size_t i = 0; i < 4; ++i)
        pts.push_back({r.code.alpha()[i], t.div(t.norm(r.code.v()[i]), u[i])});
    const Poly f = interpolate(t, pts);
    const Poly g(t, r.certificate.g_coeffs);
    const Elt scale = t.div(f.eval(fourth_roots()[0]), g.eval(fourth_roots()[0]));
    REQUIRE(f == g.scaled(scale));
}

TEST_CASE("theorem7_check agrees with the gram matrix on every norm-class assignment") {
    const FieldTower& t = f9();
    // All 36 pairs, all 2^2 norm-class combinations for v.
    for (std::uint32_t i = 0; i < t.q2(); ++i)
        for (std::uint32_t j = i + 1; j < t.q2(); ++j)
            for (std::uint32_t c1 = 1; c1 < 3; ++c1)
                for (std::uint32_t c2 = 1; c2 < 3; ++c2) {
                    const GrsCode c(t, 1, {Elt(i), Elt(j)},
                                    {t.solve_norm(Elt(c1)).front(), t.solve_norm(Elt(c2)).front()});
                    REQUIRE(theorem7_check(c) == is_hermitian_self_dual(c));
                }
    // A non-admissible 4-set: both routes must say false for any v.
    std::mt19937_64 rng(71);
    const std::vector<Elt> bad{Elt(0), Elt(1), Elt(2), Elt(3)};
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Elt> v(4);
        for (auto& x : v) x = oracle::random_nonzero(t, rng);
        const GrsCode c(t, 2, bad, v);
        REQUIRE(theorem7_check(c) == is_hermitian_self_dual(c));
        REQUIRE_FALSE(theorem7_check(c));
    }
}

TEST_CASE("self-duality only depends on the norm classes of v") {
    const FieldTower& t = f9();
    const ConstructionResult r = construction2(t, Elt(0), Elt(1), fourth_roots());
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Elt> v(4);
        for (std::size_t i = 0; i < 4; ++i) {
            const auto fiber = t.solve_norm(t.norm(r.code.v()[i]));
            v[i] = fiber[rng() % fiber.size()];
        }
        REQUIRE(is_hermitian_self_dual(GrsCode(t, 2, r.code.alpha(), v)));
    }
}

TEST_CASE("family feasibility counts") {
    for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {2, 2}}) {
        const FieldTower t = build_tower(p, m);
        std::size_t line_specs = 0;
        for (std::uint32_t a = 0; a < t.q2(); ++a)
            for (std::uint32_t b = 0; b < t.q2(); ++b)
                if (family_valid(t, {FamilyKind::line, Elt(a), Elt(b)})) {
                    ++line_specs;
                    REQUIRE(s1_set(t, Elt(a), Elt(b)).size() == t.q());
                }
        // q+1 admissible values of a, q values of b for each.
        REQUIRE(line_specs == (t.q() + 1) * t.q());
        for (std::uint32_t a = 0; a < t.q2(); ++a)
            for (std::uint32_t b = 0; b < t.q2(); ++b)
                if (family_valid(t, {FamilyKind::norm, Elt(a), Elt(b)}))
                    REQUIRE(s2_set(t, Elt(a), Elt(b)).size() == t.q() + 1);
    }
}
