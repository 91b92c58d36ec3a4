#ifndef HERMGRS_GRS_HPP
#define HERMGRS_GRS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermgrs/matrix.hpp"
#include "hermgrs/poly.hpp"

namespace hermgrs {

/// Default cap on brute-force codeword enumeration (and kernel sweeps).
inline constexpr std::uint64_t default_enum_cap = std::uint64_t{1} << 20;

/// A concrete GRS_{n,k}(α, v): evaluations v_j·f(α_j) over all polynomials f
/// of degree < k. The constructor enforces distinct evaluation points and
/// nonzero column multipliers, so every instance is MDS.
class GrsCode {
   public:
    GrsCode(const FieldTower& tower, std::size_t k, std::vector<Elt> alpha, std::vector<Elt> v)
        : tower_(&tower), k_(k), alpha_(std::move(alpha)), v_(std::move(v)) {
        const std::size_t n = alpha_.size();
        if (k_ < 1 || k_ > n || n > tower.q2())
            fail(Errc::invalid_code, "need 1 <= k <= n <= q^2");
        if (v_.size() != n) fail(Errc::length_mismatch, "alpha and v lengths differ");
        for (const Elt a : alpha_) tower.require_element(a);
        for (const Elt x : v_) {
            tower.require_element(x);
            if (x == Elt(0)) fail(Errc::invalid_code, "column multipliers must be nonzero");
        }
        std::vector<Elt> sorted(alpha_);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(Errc::invalid_code, "evaluation points must be pairwise distinct");
    }

    [[nodiscard]] const FieldTower& tower() const noexcept { return *tower_; }
    [[nodiscard]] std::size_t n() const noexcept { return alpha_.size(); }
    [[nodiscard]] std::size_t k() const noexcept { return k_; }
    [[nodiscard]] const std::vector<Elt>& alpha() const noexcept { return alpha_; }
    [[nodiscard]] const std::vector<Elt>& v() const noexcept { return v_; }

   private:
    const FieldTower* tower_;
    std::size_t k_;
    std::vector<Elt> alpha_;
    std::vector<Elt> v_;
};

/// Proof object for Hermitian self-duality. The witness ties the code to the
/// recipe that produced it: a scalar λ with v_i^{q+1}/u_i = λ, or a
/// polynomial g with v_i^{q+1}/u_i = g(α_i).
struct Certificate {
    enum class Witness { none, lambda, poly_g };

    std::vector<Elt> u;
    Witness witness_kind = Witness::none;
    Elt lambda{0};              // meaningful when witness_kind == lambda
    std::vector<Elt> g_coeffs;  // meaningful when witness_kind == poly_g
    bool gram_zero = false;
    bool theorem7_ok = false;
    std::optional<std::size_t> mds_checked;
};

/// k×n generator matrix with entry (i, j) = v_j·α_j^i.
inline Mat generator_matrix(const GrsCode& c) {
    const FieldTower& t = c.tower();
    Mat g = vandermonde(t, c.alpha(), c.k());
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j) g.at(i, j) = t.mul(g.at(i, j), c.v()[j]);
    return g;
}

/// Codeword (v_j·f(α_j))_j for the message polynomial f given by its
/// coefficients, low degree first.
inline std::vector<Elt> encode(const GrsCode& c, std::span<const Elt> message) {
    if (message.size() != c.k()) fail(Errc::length_mismatch, "message length must equal k");
    const FieldTower& t = c.tower();
    const Poly f(t, {message.begin(), message.end()});
    std::vector<Elt> word(c.n());
    for (std::size_t j = 0; j < c.n(); ++j) word[j] = t.mul(c.v()[j], f.eval(c.alpha()[j]));
    return word;
}

/// u_i = 1/G'(α_i) with G(x) = ∏(x−α_i): the classical column multipliers of
/// the dual GRS code. Computed through the derivative and cross-checked
/// against the product formula u_i = ∏_{j≠i}(α_i−α_j)⁻¹; distinct points
/// guarantee nonvanishing.
inline std::vector<Elt> u_vector(const FieldTower& t, std::span<const Elt> alpha) {
    const Poly gprime = derivative(from_roots(t, alpha));
    std::vector<Elt> u(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const Elt d = gprime.eval(alpha[i]);
        internal_check(d != Elt(0), "G' vanished at an evaluation point");
        u[i] = t.inv(d);
        Elt prod(1);
        for (std::size_t j = 0; j < alpha.size(); ++j)
            if (j != i) prod = t.mul(prod, t.sub(alpha[i], alpha[j]));
        internal_check(u[i] == t.inv(prod), "u-vector routes disagree");
    }
    return u;
}

inline std::vector<Elt> u_vector(const GrsCode& c) { return u_vector(c.tower(), c.alpha()); }

/// k×k Hermitian gram matrix with entry (i, j) = Σ_l α_l^{i+jq}·v_l^{q+1},
/// computed by the sum formula and cross-checked against G·(G^{(q)})ᵀ.
inline Mat hermitian_gram(const GrsCode& c) {
    const FieldTower& t = c.tower();
    Mat gram(t, c.k(), c.k());
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j < c.k(); ++j) {
            Elt sum(0);
            for (std::size_t l = 0; l < c.n(); ++l) {
                const std::uint64_t e = i + static_cast<std::uint64_t>(j) * t.q();
                sum = t.add(sum, t.mul(t.pow(c.alpha()[l], e), t.norm(c.v()[l])));
            }
            gram.at(i, j) = sum;
        }
    const Mat g = generator_matrix(c);
    internal_check(gram == g * g.frobenius_entrywise().transposed(), "gram routes disagree");
    return gram;
}

/// True iff n = 2k and the Hermitian gram matrix vanishes; rank k is
/// automatic for a GRS generator matrix.
inline bool is_hermitian_self_dual(const GrsCode& c) {
    return c.n() == 2 * c.k() && hermitian_gram(c).is_zero();
}

/// (n−k)×n parity-check matrix with entry (i, j) = (u_j/v_j)·α_j^i. A full
/// rate code (k = n) has the empty 0×n matrix.
inline Mat parity_check_matrix(const GrsCode& c) {
    const FieldTower& t = c.tower();
    if (c.n() == c.k()) return Mat(t, 0, c.n());
    const std::vector<Elt> u = u_vector(c);
    Mat h = vandermonde(t, c.alpha(), c.n() - c.k());
    for (std::size_t i = 0; i < c.n() - c.k(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j) h.at(i, j) = t.mul(h.at(i, j), t.div(u[j], c.v()[j]));
    return h;
}

/// Minimum Hamming weight over all nonzero codewords, by exhaustive message
/// enumeration. Scalar multiples share a weight, so only messages whose first
/// nonzero coefficient is 1 are encoded; the cap still guards the full
/// message-space size q^{2k}.
inline std::size_t min_distance_bruteforce(const GrsCode& c, std::uint64_t enum_cap = default_enum_cap) {
    const FieldTower& t = c.tower();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k(); ++i) {
        if (total > enum_cap / t.q2()) fail(Errc::too_large_to_enumerate, "q^{2k} exceeds enumeration cap");
        total *= t.q2();
    }
    if (total > enum_cap) fail(Errc::too_large_to_enumerate, "q^{2k} exceeds enumeration cap");
    std::size_t best = c.n() + 1;
    std::vector<Elt> message(c.k(), Elt(0));
    // Positions after `lead` run through the whole field; `lead` is pinned to 1.
    for (std::size_t lead = 0; lead < c.k(); ++lead) {
        std::fill(message.begin(), message.end(), Elt(0));
        message[lead] = Elt(1);
        bool carry = false;
        while (!carry) {
            const std::vector<Elt> word = encode(c, message);
            std::size_t weight = 0;
            for (const Elt w : word) weight += (w != Elt(0)) ? 1 : 0;
            best = std::min(best, weight);
            carry = true;
            for (std::size_t pos = lead + 1; pos < c.k() && carry; ++pos) {
                const std::uint32_t next = message[pos].index() + 1;
                carry = next == t.q2();
                message[pos] = Elt(carry ? 0 : next);
            }
        }
    }
    return best;
}

}  // namespace hermgrs

#endif
