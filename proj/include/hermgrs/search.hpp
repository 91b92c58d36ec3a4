#ifndef HERMGRS_SEARCH_HPP
#define HERMGRS_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "hermgrs/construct.hpp"

namespace hermgrs {

/// Default cap on the number of subsets a classification run may enumerate.
inline constexpr std::uint64_t default_subset_cap = 10'000'000;

/// The linear-recurring sequence Δ_i = Σ_l α_l^i·x_l attached to evaluation
/// points α and weights x.
struct DeltaSeq {
    std::vector<Elt> alpha;
    std::vector<Elt> x;
    std::vector<Elt> values;
};

inline DeltaSeq delta_sequence(const FieldTower& t, std::span<const Elt> alpha, std::span<const Elt> x,
                               std::size_t length) {
    if (alpha.size() != x.size()) fail(Errc::length_mismatch, "alpha and x lengths differ");
    std::vector<Elt> sorted(alpha.begin(), alpha.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(Errc::duplicate_root, "evaluation points must be pairwise distinct");
    DeltaSeq seq{{alpha.begin(), alpha.end()}, {x.begin(), x.end()}, {}};
    seq.values.reserve(length);
    std::vector<Elt> powers(alpha.size(), Elt(1));
    for (std::size_t i = 0; i < length; ++i) {
        Elt sum(0);
        for (std::size_t l = 0; l < alpha.size(); ++l) sum = t.add(sum, t.mul(powers[l], x[l]));
        seq.values.push_back(sum);
        for (std::size_t l = 0; l < alpha.size(); ++l) powers[l] = t.mul(powers[l], alpha[l]);
    }
    return seq;
}

/// Companion matrix of a monic G = xⁿ − Σ c_i·xⁱ: superdiagonal ones and
/// last row (c_0, …, c_{n−1}). Each root α of G has eigenvector
/// (1, α, …, α^{n−1})ᵀ with eigenvalue α, which also makes T the state
/// transition of the Δ-sequence.
inline Mat companion_matrix(const Poly& G) {
    if (!(!G.is_zero() && G.is_monic())) fail(Errc::not_monic, "companion matrix needs a monic polynomial");
    const std::size_t n = G.degree();
    if (n < 1) fail(Errc::bad_argument, "companion matrix needs degree >= 1");
    const FieldTower& t = G.tower();
    Mat m(t, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = Elt(1);
    for (std::size_t i = 0; i < n; ++i) m.at(n - 1, i) = t.neg(G.coeff(i));
    return m;
}

/// Searches for x ∈ (F_q*)ⁿ solving Σ_l α_l^{i+jq}·x_l = 0 for all
/// 0 ≤ i, j ≤ k−1. The F_q solution space comes from the subfield kernel of
/// the k²×n system; its F_q-span is then enumerated exhaustively for an
/// all-nonzero vector, so a nullopt answer is a proof at this scale.
inline std::optional<std::vector<Elt>> lemma1_solve(const FieldTower& t, std::span<const Elt> alpha,
                                                    std::uint64_t kernel_cap = default_enum_cap) {
    const std::size_t n = alpha.size();
    if (n < 2 || n % 2 != 0) fail(Errc::not_even, "need an even number n >= 2 of evaluation points");
    const std::size_t k = n / 2;
    Mat system(t, k * k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const std::uint64_t e = i + static_cast<std::uint64_t>(j) * t.q();
                system.at(i * k + j, l) = t.pow(alpha[l], e);
            }
    const std::vector<std::vector<Elt>> basis = subfield_kernel(system);
    if (basis.empty()) return std::nullopt;
    std::uint64_t combos = 1;
    for (std::size_t d = 0; d < basis.size(); ++d) {
        if (combos > kernel_cap / t.q()) fail(Errc::kernel_too_large, "q^dim(kernel) exceeds enumeration cap");
        combos *= t.q();
    }
    if (combos > kernel_cap) fail(Errc::kernel_too_large, "q^dim(kernel) exceeds enumeration cap");
    for (std::uint64_t counter = 1; counter < combos; ++counter) {
        std::vector<Elt> x(n, Elt(0));
        std::uint64_t rest = counter;
        for (const auto& vec : basis) {
            const Elt coeff(static_cast<std::uint32_t>(rest % t.q()));
            rest /= t.q();
            if (coeff == Elt(0)) continue;
            for (std::size_t l = 0; l < n; ++l) x[l] = t.add(x[l], t.mul(coeff, vec[l]));
        }
        const bool all_nonzero = std::none_of(x.begin(), x.end(), [](Elt e) { return e == Elt(0); });
        if (all_nonzero) return x;
    }
    return std::nullopt;
}

/// Every family whose full root set contains the given points: at most one
/// LINE spec (pinned by any two points) followed by the NORM specs in
/// ascending a.
inline std::vector<FamilySpec> family_match(const FieldTower& t, std::span<const Elt> alpha) {
    if (alpha.size() < 2) fail(Errc::bad_argument, "family matching needs at least two points");
    std::vector<FamilySpec> out;
    if (const auto line = line_family_through(t, alpha)) out.push_back(*line);
    const auto norms = norm_families_containing(t, alpha);
    out.insert(out.end(), norms.begin(), norms.end());
    return out;
}

/// One admissible evaluation set: a witness x ∈ (F_q*)ⁿ for the solvability
/// system plus every family containing the set (empty = a classification
/// violation, reported rather than asserted).
struct AdmissibleEntry {
    std::vector<Elt> alpha;
    std::vector<Elt> witness;
    std::vector<FamilySpec> families;
};

struct ClassReport {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::uint64_t total_subsets = 0;
    std::vector<AdmissibleEntry> admissible;
    std::size_t line_matched = 0;
    std::size_t norm_matched = 0;
    std::size_t unmatched = 0;

    [[nodiscard]] std::vector<const AdmissibleEntry*> violations() const {
        std::vector<const AdmissibleEntry*> out;
        for (const auto& entry : admissible)
            if (entry.families.empty()) out.push_back(&entry);
        return out;
    }
};

namespace detail {

inline std::uint64_t binomial_capped(std::uint64_t total, std::uint64_t choose, std::uint64_t cap) {
    if (choose > total) return 0;
    choose = std::min(choose, total - choose);
    const std::uint64_t over = cap == std::numeric_limits<std::uint64_t>::max() ? cap : cap + 1;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < choose; ++i) {
        const std::uint64_t factor = total - i;
        if (r > std::numeric_limits<std::uint64_t>::max() / factor) return over;
        r = r * factor / (i + 1);  // exact: r is a binomial coefficient at every step
        // Within choose <= total/2 the partial values are nondecreasing.
        if (r > cap) return over;
    }
    return r;
}

// Advances a sorted index tuple to its colexicographic successor; returns
// false once exhausted.
inline bool next_colex(std::vector<std::uint32_t>& subset, std::uint32_t ground) {
    const std::size_t n = subset.size();
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t limit = (j + 1 < n) ? subset[j + 1] : ground;
        if (subset[j] + 1 < limit) {
            ++subset[j];
            for (std::size_t i = 0; i < j; ++i) subset[i] = static_cast<std::uint32_t>(i);
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Enumerates all n-subsets of F_{q²} in colexicographic order, decides
/// admissibility of each through lemma1_solve, and matches every admissible
/// set against the two families. Workers split the stream by subset ordinal
/// and the merged report is ordinal-ordered, so the output is deterministic
/// for any job count.
inline ClassReport classify(const FieldTower& t, std::size_t n, std::size_t jobs = 1,
                            std::uint64_t subset_cap = default_subset_cap,
                            std::uint64_t kernel_cap = default_enum_cap) {
    if (n < 2 || n % 2 != 0) fail(Errc::not_even, "classification needs an even n >= 2");
    const std::uint64_t total = detail::binomial_capped(t.q2(), n, subset_cap);
    if (total > subset_cap) fail(Errc::too_many_subsets, "C(q^2, n) exceeds subset cap");
    jobs = std::max<std::size_t>(jobs, 1);

    using Found = std::pair<std::uint64_t, AdmissibleEntry>;
    std::vector<std::vector<Found>> found(jobs);
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const auto worker = [&](std::size_t self) {
        try {
            std::vector<std::uint32_t> subset(n);
            for (std::size_t i = 0; i < n; ++i) subset[i] = static_cast<std::uint32_t>(i);
            if (subset.empty() || subset.back() >= t.q2()) return;
            std::uint64_t ordinal = 0;
            do {
                if (ordinal % jobs == self) {
                    std::vector<Elt> alpha(n);
                    for (std::size_t i = 0; i < n; ++i) alpha[i] = Elt(subset[i]);
                    if (auto witness = lemma1_solve(t, alpha, kernel_cap))
                        found[self].push_back(
                            {ordinal, {alpha, std::move(*witness), family_match(t, alpha)}});
                }
                ++ordinal;
            } while (detail::next_colex(subset, t.q2()));
        } catch (...) {
            const std::scoped_lock lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& th : threads) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<Found> merged;
    for (auto& part : found) merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                                           std::make_move_iterator(part.end()));
    std::sort(merged.begin(), merged.end(), [](const Found& a, const Found& b) { return a.first < b.first; });

    ClassReport report;
    report.q = t.q();
    report.n = n;
    report.total_subsets = total;
    for (auto& [ordinal, entry] : merged) {
        const bool has_line = std::any_of(entry.families.begin(), entry.families.end(),
                                          [](const FamilySpec& s) { return s.kind == FamilyKind::line; });
        const bool has_norm = std::any_of(entry.families.begin(), entry.families.end(),
                                          [](const FamilySpec& s) { return s.kind == FamilyKind::norm; });
        report.line_matched += has_line ? 1 : 0;
        report.norm_matched += has_norm ? 1 : 0;
        report.unmatched += entry.families.empty() ? 1 : 0;
        report.admissible.push_back(std::move(entry));
    }
    return report;
}

}  // namespace hermgrs

#endif
