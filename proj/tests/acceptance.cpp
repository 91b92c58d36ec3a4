// Acceptance suite: one pass/fail line per criterion, exit 0 only if all hold.
// Everything is exact arithmetic; every tolerance is zero.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "hermgrs/search.hpp"

using namespace hermgrs;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Context {
    // (q, report) pairs from every classification run, re-checked by criterion 5.
    std::vector<std::pair<std::uint32_t, ClassReport>> reports;
};

std::vector<std::pair<std::uint32_t, std::uint32_t>> sweep_fields() { return {{3, 1}, {2, 2}, {5, 1}, {7, 1}}; }

// All n-element index combinations of {0..total-1}, colex order.
void for_each_combination(std::size_t total, std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (n > total) return;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t j = 0;
        for (; j < n; ++j) {
            const std::size_t limit = (j + 1 < n) ? idx[j + 1] : total;
            if (idx[j] + 1 < limit) break;
        }
        if (j == n) return;
        ++idx[j];
        for (std::size_t i = 0; i < j; ++i) idx[i] = i;
    }
}

// Criterion 1: every code either construction produces, over every valid
// family and every even-length point subset, is Hermitian self-dual and MDS.
Outcome criterion1() {
    Outcome o;
    std::size_t built = 0, lambda_infeasible = 0, norm_infeasible = 0, mds_checked = 0;
    for (const auto& [p, m] : sweep_fields()) {
        const FieldTower t = build_tower(p, m);
        const std::uint32_t q = t.q();
        const auto handle = [&](const FamilySpec& spec, const std::vector<Elt>& roots, std::size_t n,
                                const std::vector<std::size_t>& pick) {
            std::vector<Elt> alpha(n);
            for (std::size_t i = 0; i < n; ++i) alpha[i] = roots[pick[i]];
            try {
                const ConstructionResult r = spec.kind == FamilyKind::line
                                                 ? construction1(t, alpha, std::nullopt, spec)
                                                 : construction2(t, spec.a, spec.b, alpha);
                ++built;
                if (!is_hermitian_self_dual(r.code) || !r.certificate.gram_zero) {
                    o.pass = false;
                    return;
                }
                const std::size_t k = n / 2;
                std::uint64_t words = 1;
                bool within = true;
                for (std::size_t i = 0; i < k && within; ++i) {
                    within = words <= default_enum_cap / t.q2();
                    if (within) words *= t.q2();
                }
                if (within && words <= default_enum_cap) {
                    ++mds_checked;
                    if (min_distance_bruteforce(r.code) != n - k + 1) o.pass = false;
                }
            } catch (const Error& e) {
                if (e.code() == Errc::no_feasible_lambda)
                    ++lambda_infeasible;
                else if (e.code() == Errc::norm_infeasible)
                    ++norm_infeasible;
                else
                    o.pass = false;
            }
        };
        for (std::uint32_t ai = 0; ai < t.q2(); ++ai) {
            if (t.pow(Elt(ai), q + 1) != Elt(1)) continue;
            for (std::uint32_t bi = 0; bi < t.q2(); ++bi) {
                const FamilySpec spec{FamilyKind::line, Elt(ai), Elt(bi)};
                if (!family_valid(t, spec)) continue;
                const std::vector<Elt> roots = s1_set(t, spec.a, spec.b);
                for (std::size_t n = 2; n <= roots.size() && n <= q + 1; n += 2)
                    for_each_combination(roots.size(), n,
                                         [&](const std::vector<std::size_t>& pick) { handle(spec, roots, n, pick); });
            }
        }
        for (std::uint32_t ai = 0; ai < t.q2(); ++ai)
            for (std::uint32_t bi = 1; bi < q; ++bi) {
                const FamilySpec spec{FamilyKind::norm, Elt(ai), Elt(bi)};
                const std::vector<Elt> roots = s2_set(t, spec.a, spec.b);
                for (std::size_t n = 2; n <= roots.size() && n <= q + 1; n += 2)
                    for_each_combination(roots.size(), n,
                                         [&](const std::vector<std::size_t>& pick) { handle(spec, roots, n, pick); });
            }
    }
    std::ostringstream detail;
    detail << built << " codes verified self-dual, " << mds_checked << " distance-checked, infeasible entries logged: "
           << lambda_infeasible << " lambda, " << norm_infeasible << " norm";
    o.detail = detail.str();
    return o;
}

// Criterion 2: the degree criterion and the gram matrix agree on every
// admissible point set and every norm-class assignment of v at q = 3.
Outcome criterion2(Context& ctx) {
    Outcome o;
    const FieldTower t = build_tower(3, 1);
    std::size_t cases = 0, mismatches = 0;
    for (const std::size_t n : {std::size_t{2}, std::size_t{4}}) {
        const ClassReport report = classify(t, n);
        ctx.reports.emplace_back(t.q(), report);
        for (const auto& entry : report.admissible) {
            std::vector<std::uint32_t> classes(n, 1);
            while (true) {
                std::vector<Elt> v(n);
                for (std::size_t i = 0; i < n; ++i) v[i] = t.solve_norm(Elt(classes[i])).front();
                const GrsCode code(t, n / 2, entry.alpha, v);
                ++cases;
                if (theorem7_check(code) != is_hermitian_self_dual(code)) ++mismatches;
                std::size_t pos = 0;
                while (pos < n && classes[pos] == t.q() - 1) classes[pos++] = 1;
                if (pos == n) break;
                ++classes[pos];
            }
        }
    }
    o.pass = mismatches == 0 && cases > 0;
    o.detail = std::to_string(cases) + " cases, " + std::to_string(mismatches) + " disagreements";
    return o;
}

// Criterion 3: no admissible 6-subsets at q = 3 (84 subsets) or q = 4 (8008).
Outcome criterion3(Context& ctx) {
    Outcome o;
    const FieldTower t3 = build_tower(3, 1);
    const ClassReport r3 = classify(t3, 6);
    ctx.reports.emplace_back(t3.q(), r3);
    const FieldTower t4 = build_tower(2, 2);
    const ClassReport r4 = classify(t4, 6);
    ctx.reports.emplace_back(t4.q(), r4);
    o.pass = r3.total_subsets == 84 && r3.admissible.empty() && r4.total_subsets == 8008 && r4.admissible.empty();
    o.detail = "q=3: " + std::to_string(r3.total_subsets) + " subsets / " + std::to_string(r3.admissible.size()) +
               " admissible; q=4: " + std::to_string(r4.total_subsets) + " subsets / " +
               std::to_string(r4.admissible.size()) + " admissible";
    return o;
}

// Criterion 4: the q = 3 classification is clean and complete: n = 4
// admissible sets are exactly the full NORM root sets; all 36 pairs are
// admissible LINE sets.
Outcome criterion4(const Context& ctx) {
    Outcome o;
    const FieldTower t = build_tower(3, 1);
    const ClassReport* r2 = nullptr;
    const ClassReport* r4 = nullptr;
    for (const auto& [q, report] : ctx.reports) {
        if (q == 3 && report.n == 2) r2 = &report;
        if (q == 3 && report.n == 4) r4 = &report;
    }
    if (!r2 || !r4) return {false, "classification runs missing"};

    std::set<std::vector<std::uint32_t>> expected;
    for (std::uint32_t a = 0; a < t.q2(); ++a)
        for (std::uint32_t b = 1; b < t.q(); ++b) {
            std::vector<std::uint32_t> key;
            for (const Elt e : s2_set(t, Elt(a), Elt(b))) key.push_back(e.index());
            expected.insert(key);
        }
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& entry : r4->admissible) {
        std::vector<std::uint32_t> key;
        for (const Elt e : entry.alpha) key.push_back(e.index());
        got.insert(key);
        if (entry.families.empty()) o.pass = false;
    }
    if (got != expected) o.pass = false;
    if (!r4->violations().empty()) o.pass = false;

    if (r2->admissible.size() != 36 || r2->total_subsets != 36) o.pass = false;
    for (const auto& entry : r2->admissible) {
        const bool has_line = std::any_of(entry.families.begin(), entry.families.end(),
                                          [](const FamilySpec& s) { return s.kind == FamilyKind::line; });
        if (!has_line) o.pass = false;
    }
    o.detail = "n=4: " + std::to_string(got.size()) + " admissible == " + std::to_string(expected.size()) +
               " NORM root sets; n=2: " + std::to_string(r2->admissible.size()) + "/36 pairs on lines";
    return o;
}

// Criterion 5: no classification run may contain an admissible set once
// k = n/2 reaches q.
Outcome criterion5(Context& ctx) {
    Outcome o;
    // Two extra runs that push k past q on purpose.
    const FieldTower t3 = build_tower(3, 1);
    ctx.reports.emplace_back(t3.q(), classify(t3, 8));  // k = 4 >= 3
    const FieldTower t2 = build_tower(2, 1);
    ctx.reports.emplace_back(t2.q(), classify(t2, 4));  // k = 2 >= 2
    std::size_t checked = 0;
    for (const auto& [q, report] : ctx.reports)
        if (report.n / 2 >= q) {
            ++checked;
            if (!report.admissible.empty()) o.pass = false;
        }
    o.detail = std::to_string(checked) + " reports with k >= q, all empty";
    return o;
}

// Criterion 6: companion eigenvectors, the Delta state transition and
// annihilating polynomials, 1000 randomized instances per field.
Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(0x5eed);
    std::size_t instances = 0;
    for (const auto& [p, m] : sweep_fields()) {
        const FieldTower t = build_tower(p, m);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t n = 1 + rng() % std::min<std::size_t>(8, t.q2() - 1);
            std::vector<std::uint32_t> pool(t.q2());
            for (std::uint32_t i = 0; i < t.q2(); ++i) pool[i] = i;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<Elt> alpha(n), x(n);
            for (std::size_t i = 0; i < n; ++i) alpha[i] = Elt(pool[i]);
            for (auto& e : x) e = Elt(static_cast<std::uint32_t>(rng() % t.q2()));
            ++instances;

            const Poly G = from_roots(t, alpha);
            const Mat T = companion_matrix(G);
            for (const Elt root : alpha) {
                std::vector<Elt> eig(n);
                Elt power(1);
                for (auto& e : eig) {
                    e = power;
                    power = t.mul(power, root);
                }
                const auto image = T.apply(eig);
                for (std::size_t i = 0; i < n; ++i)
                    if (image[i] != t.mul(root, eig[i])) o.pass = false;
            }

            const auto seq = delta_sequence(t, alpha, x, 2 * n + 8);
            for (std::size_t i = 0; i + n < seq.values.size(); ++i) {
                const std::vector<Elt> window(seq.values.begin() + i, seq.values.begin() + i + n);
                const auto next = T.apply(window);
                for (std::size_t j = 0; j < n; ++j)
                    if (next[j] != seq.values[i + 1 + j]) o.pass = false;
            }

            const Poly h = G * Poly(t, {t.neg(Elt(static_cast<std::uint32_t>(rng() % t.q2()))), Elt(1)});
            const std::size_t dh = h.degree();
            for (std::size_t i = 0; i + dh < seq.values.size(); ++i) {
                Elt acc(0);
                for (std::size_t j = 0; j <= dh; ++j) acc = t.add(acc, t.mul(h.coeff(j), seq.values[i + j]));
                if (acc != Elt(0)) o.pass = false;
            }
        }
    }
    o.detail = std::to_string(instances) + " randomized instances, exact";
    return o;
}

// Criterion 7: the solvability law for x^q = a*x + b over all (a, b) pairs.
Outcome criterion7() {
    Outcome o;
    std::uint64_t pairs = 0, multi = 0;
    for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {2, 2}, {5, 1}}) {
        const FieldTower t = build_tower(p, m);
        for (std::uint32_t a = 0; a < t.q2(); ++a)
            for (std::uint32_t b = 0; b < t.q2(); ++b) {
                ++pairs;
                const auto set = s1_set(t, Elt(a), Elt(b));
                const bool valid = family_valid(t, {FamilyKind::line, Elt(a), Elt(b)});
                if ((set.size() > 1) != valid) o.pass = false;
                if (valid) {
                    ++multi;
                    if (set.size() != t.q()) o.pass = false;
                }
            }
    }
    o.detail = std::to_string(pairs) + " (a, b) pairs scanned, " + std::to_string(multi) + " with |S1| = q";
    return o;
}

// Criterion 8: field axioms exhaustively for q^2 <= 256, norm fiber sizes,
// and elimination invariants over random matrices.
Outcome criterion8() {
    Outcome o;
    std::size_t towers = 0;
    for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        const FieldTower t = build_tower(p, m);
        ++towers;
        const std::uint32_t N = t.q2();
        for (std::uint32_t a = 0; a < N; ++a) {
            if (t.add(Elt(a), Elt(0)) != Elt(a)) o.pass = false;
            if (t.mul(Elt(a), Elt(1)) != Elt(a)) o.pass = false;
            if (a != 0 && t.mul(Elt(a), t.inv(Elt(a))) != Elt(1)) o.pass = false;
            for (std::uint32_t b = 0; b < N; ++b) {
                if (t.add(Elt(a), Elt(b)) != t.add(Elt(b), Elt(a))) o.pass = false;
                if (t.mul(Elt(a), Elt(b)) != t.mul(Elt(b), Elt(a))) o.pass = false;
                for (std::uint32_t c = 0; c < N; c += 7) {
                    if (t.add(t.add(Elt(a), Elt(b)), Elt(c)) != t.add(Elt(a), t.add(Elt(b), Elt(c)))) o.pass = false;
                    if (t.mul(t.mul(Elt(a), Elt(b)), Elt(c)) != t.mul(Elt(a), t.mul(Elt(b), Elt(c)))) o.pass = false;
                    if (t.mul(Elt(a), t.add(Elt(b), Elt(c))) !=
                        t.add(t.mul(Elt(a), Elt(b)), t.mul(Elt(a), Elt(c))))
                        o.pass = false;
                }
            }
        }
        for (std::uint32_t c = 1; c < t.q(); ++c)
            if (t.solve_norm(Elt(c)).size() != t.q() + 1) o.pass = false;
    }

    std::mt19937_64 rng(0xacce55);
    std::size_t matrices = 0;
    for (const auto& [p, m] : sweep_fields()) {
        const FieldTower t = build_tower(p, m);
        for (int trial = 0; trial < 1000; ++trial) {
            Mat M(t, 1 + rng() % 6, 1 + rng() % 6);
            for (std::size_t r = 0; r < M.rows(); ++r)
                for (std::size_t c = 0; c < M.cols(); ++c) M.at(r, c) = Elt(static_cast<std::uint32_t>(rng() % t.q2()));
            ++matrices;
            const RrefResult rr = rref(M);
            const RrefResult rr2 = rref(rr.matrix);
            if (!(rr.matrix == rr2.matrix) || rr.rank != rr2.rank) o.pass = false;
            const auto basis = kernel(M);
            if (basis.size() != M.cols() - rr.rank) o.pass = false;
            for (const auto& vec : basis) {
                const auto image = M.apply(vec);
                for (const Elt e : image)
                    if (e != Elt(0)) o.pass = false;
            }
        }
    }
    o.detail = std::to_string(towers) + " towers exhaustive, " + std::to_string(matrices) + " random matrices";
    return o;
}

}  // namespace

int main() {
    Context ctx;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"construction soundness sweep (q in {3,4,5,7})", [] { return criterion1(); }},
        {"degree criterion == gram criterion (q=3, n in {2,4}, all norm classes)",
         [&ctx] { return criterion2(ctx); }},
        {"nonexistence at n = 6 for q = 3 and q = 4", [&ctx] { return criterion3(ctx); }},
        {"classification completeness at q = 3", [&ctx] { return criterion4(ctx); }},
        {"no admissible sets once k >= q", [&ctx] { return criterion5(ctx); }},
        {"recurrence suite, 1000 random instances per field", [] { return criterion6(); }},
        {"solvability law for x^q = ax + b (q in {3,4,5})", [] { return criterion7(); }},
        {"field and linear-algebra substrate", [] { return criterion8(); }},
    };

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        all = all && outcome.pass;
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": " << criteria[i].first
                  << " | " << outcome.detail << " (" << ms << " ms)\n";
    }
    std::cout << (all ? "acceptance: ALL CRITERIA PASS\n" : "acceptance: FAILURES PRESENT\n");
    return all ? 0 : 1;
}
