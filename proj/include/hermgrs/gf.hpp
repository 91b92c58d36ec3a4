#ifndef HERMGRS_GF_HPP
#define HERMGRS_GF_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hermgrs/error.hpp"

namespace hermgrs {

/// Default bound on q²; all verification in this library is exhaustive, so
/// field sizes are kept at desk scale.
inline constexpr std::uint64_t default_tower_cap = std::uint64_t{1} << 16;

/// One element of F_{q²} in canonical integer encoding. The index is
/// lo + hi*q, where lo and hi are the base-p digit encodings of the two F_q
/// coordinates in the basis {1, θ}. Index 0 is the additive identity and
/// index 1 the multiplicative identity.
class Elt {
   public:
    constexpr Elt() = default;
    constexpr explicit Elt(std::uint32_t index) : index_(index) {}
    [[nodiscard]] constexpr std::uint32_t index() const noexcept { return index_; }
    friend constexpr auto operator<=>(const Elt&, const Elt&) = default;

   private:
    std::uint32_t index_ = 0;
};

namespace detail {

// Polynomial helpers over F_p used only while building a tower. Coefficients
// are ints in [0, p), low degree first, no trailing-zero guarantee.
using FpPoly = std::vector<std::uint32_t>;

inline std::uint32_t fp_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e != 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) { return fp_pow(a, p - 2, p); }

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by monic-normalizable g (leading coefficient inverted).
inline FpPoly fp_mod(FpPoly f, const FpPoly& g, std::uint32_t p) {
    fp_trim(f);
    const std::size_t dg = g.size() - 1;
    const std::uint32_t lead_inv = fp_inv(g.back(), p);
    while (f.size() > dg) {
        const std::uint64_t c = std::uint64_t{f.back()} * lead_inv % p;
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            std::uint64_t t = f[shift + i] + p - c * g[i] % p;
            f[shift + i] = static_cast<std::uint32_t>(t % p);
        }
        fp_trim(f);
    }
    return f;
}

inline bool fp_is_zero(const FpPoly& f) {
    return std::all_of(f.begin(), f.end(), [](std::uint32_t c) { return c == 0; });
}

// Exhaustive factor check: f (monic, degree ≥ 1) has no monic divisor of
// degree 1..deg(f)/2. Fields here are tiny, so trial division over all
// candidate divisors is the proof.
inline bool fp_irreducible(const FpPoly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t s = 0; s < count; ++s) {
            FpPoly g(d + 1, 0);
            std::uint64_t rest = s;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (fp_is_zero(fp_mod(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace detail

/// The arithmetic context F_p ⊂ F_q ⊂ F_{q²} with q = p^m. Moduli are chosen
/// canonically (see build notes below) so that element encodings are
/// reproducible across runs and implementations. Immutable after
/// construction and safe to share across concurrent readers.
class FieldTower {
   public:
    /// Builds the tower for the given prime p and extension degree m ≥ 1.
    /// Canonical moduli: over F_p the monic irreducible of degree m whose
    /// non-leading coefficient tuple has the smallest value Σ c_j·p^j; over
    /// F_q the monic irreducible y² + b·y + c minimizing index(b)·q + index(c).
    /// The generator is the smallest-index element of order q²−1.
    FieldTower(std::uint32_t p, std::uint32_t m, std::uint64_t size_cap = default_tower_cap) : p_(p), m_(m) {
        if (!is_prime(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
        if (m < 1) fail(Errc::bad_argument, "extension degree m must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q * q > size_cap) fail(Errc::too_large, "q^2 = " + std::to_string(q * q) + " exceeds cap");
        }
        q_ = static_cast<std::uint32_t>(q);
        q2_ = q_ * q_;
        choose_base_modulus();
        build_fq_tables();
        choose_top_modulus();
        build_frobenius_and_norm();
        find_generator();
    }

    [[nodiscard]] std::uint32_t p() const noexcept { return p_; }
    [[nodiscard]] std::uint32_t m() const noexcept { return m_; }
    [[nodiscard]] std::uint32_t q() const noexcept { return q_; }
    [[nodiscard]] std::uint32_t q2() const noexcept { return q2_; }
    /// Monic irreducible over F_p defining F_q; coefficients low degree first.
    [[nodiscard]] const std::vector<std::uint32_t>& base_modulus() const noexcept { return base_modulus_; }
    /// Top modulus y² + b·y + c as F_q indices {c, b, 1}, low degree first.
    [[nodiscard]] std::vector<std::uint32_t> top_modulus() const { return {top_c_, top_b_, 1}; }
    [[nodiscard]] Elt generator() const noexcept { return generator_; }
    /// The canonical root θ of the top modulus: coordinates (0, 1), index q.
    [[nodiscard]] Elt theta() const noexcept { return Elt(q_); }

    [[nodiscard]] bool valid(Elt e) const noexcept { return e.index() < q2_; }
    void require_element(Elt e) const {
        if (!valid(e)) fail(Errc::bad_argument, "element index " + std::to_string(e.index()) + " out of range");
    }

    /// Encodes the {1, θ} coordinate pair (c0, c1); both must lie in F_q.
    [[nodiscard]] Elt encode(Elt c0, Elt c1) const {
        if (c0.index() >= q_ || c1.index() >= q_) fail(Errc::bad_argument, "coordinates must be base-field elements");
        return Elt(c0.index() + c1.index() * q_);
    }
    /// Decodes e = c0 + c1·θ into (c0, c1), both embedded base-field elements.
    [[nodiscard]] std::pair<Elt, Elt> decode(Elt e) const noexcept {
        return {Elt(e.index() % q_), Elt(e.index() / q_)};
    }

    [[nodiscard]] Elt add(Elt a, Elt b) const noexcept {
        const auto [a0, a1] = split(a);
        const auto [b0, b1] = split(b);
        return join(fq_add_[a0 * q_ + b0], fq_add_[a1 * q_ + b1]);
    }
    [[nodiscard]] Elt neg(Elt a) const noexcept {
        const auto [a0, a1] = split(a);
        return join(fq_neg_[a0], fq_neg_[a1]);
    }
    [[nodiscard]] Elt sub(Elt a, Elt b) const noexcept { return add(a, neg(b)); }
    [[nodiscard]] Elt mul(Elt a, Elt b) const noexcept {
        // (a0 + a1θ)(b0 + b1θ) with θ² = −bθ − c from the top modulus.
        const auto [a0, a1] = split(a);
        const auto [b0, b1] = split(b);
        const std::uint32_t cross = fq_mul_[a1 * q_ + b1];
        const std::uint32_t r0 = fq_sub(fq_mul_[a0 * q_ + b0], fq_mul_[top_c_ * q_ + cross]);
        std::uint32_t r1 = fq_add_[fq_mul_[a0 * q_ + b1] * q_ + fq_mul_[a1 * q_ + b0]];
        r1 = fq_sub(r1, fq_mul_[top_b_ * q_ + cross]);
        return join(r0, r1);
    }
    [[nodiscard]] Elt inv(Elt a) const {
        if (a == Elt(0)) fail(Errc::division_by_zero, "inverse of zero");
        // a⁻¹ = a^q / N(a); the norm N(a) = a^{q+1} is a nonzero base-field
        // element, inverted through the F_q table.
        const std::uint32_t n = norm_[a.index()];
        return mul(Elt(frob_[a.index()]), Elt(fq_inv_[n]));
    }
    [[nodiscard]] Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    [[nodiscard]] Elt pow(Elt base, std::uint64_t e) const noexcept {
        Elt acc(1);
        while (e != 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    /// The q-power map y ↦ y^q, the relative Frobenius of F_{q²}/F_q.
    [[nodiscard]] Elt frobenius(Elt e) const noexcept { return Elt(frob_[e.index()]); }
    /// The norm map y ↦ y^{q+1}; lands in F_q, multiplicative.
    [[nodiscard]] Elt norm(Elt e) const noexcept { return Elt(norm_[e.index()]); }

    /// True iff e lies in F_q, i.e. e^q = e. The hi coordinate being zero is
    /// an equivalent test; both are evaluated and must agree.
    [[nodiscard]] bool is_in_base_field(Elt e) const {
        const bool by_frobenius = frob_[e.index()] == e.index();
        const bool by_coordinate = e.index() < q_;
        internal_check(by_frobenius == by_coordinate, "base-field membership tests disagree");
        return by_frobenius;
    }

    /// All v with v^{q+1} = c, in ascending index order, by exhaustive scan.
    /// |result| = q+1 for c ∈ F_q*, {0} for c = 0, empty for c outside F_q.
    [[nodiscard]] std::vector<Elt> solve_norm(Elt c) const {
        std::vector<Elt> out;
        for (std::uint32_t i = 0; i < q2_; ++i)
            if (norm_[i] == c.index()) out.push_back(Elt(i));
        return out;
    }

    /// Embeds k mod p into the prime subfield (indices 0..p−1).
    [[nodiscard]] Elt from_int(std::uint64_t k) const noexcept { return Elt(static_cast<std::uint32_t>(k % p_)); }

   private:
    [[nodiscard]] std::pair<std::uint32_t, std::uint32_t> split(Elt e) const noexcept {
        return {e.index() % q_, e.index() / q_};
    }
    [[nodiscard]] Elt join(std::uint32_t lo, std::uint32_t hi) const noexcept { return Elt(lo + hi * q_); }
    [[nodiscard]] std::uint32_t fq_sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return fq_add_[a * q_ + fq_neg_[b]];
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    void choose_base_modulus() {
        // Scan non-leading coefficient tuples by ascending integer value; the
        // first irreducible hit is canonical. A miss cannot happen (monic
        // irreducibles of every degree exist over F_p).
        for (std::uint64_t s = 0; s < q_; ++s) {
            detail::FpPoly f(m_ + 1, 0);
            std::uint64_t rest = s;
            for (std::uint32_t i = 0; i < m_; ++i) {
                f[i] = static_cast<std::uint32_t>(rest % p_);
                rest /= p_;
            }
            f[m_] = 1;
            if (detail::fp_irreducible(f, p_)) {
                base_modulus_ = f;
                return;
            }
        }
        internal_check(false, "no irreducible base modulus found");
    }

    [[nodiscard]] detail::FpPoly fq_digits(std::uint32_t idx) const {
        detail::FpPoly d(m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
            d[i] = idx % p_;
            idx /= p_;
        }
        return d;
    }
    [[nodiscard]] std::uint32_t fq_index(const detail::FpPoly& d) const {
        std::uint32_t idx = 0;
        for (std::uint32_t i = m_; i-- > 0;) idx = idx * p_ + (i < d.size() ? d[i] : 0);
        return idx;
    }

    void build_fq_tables() {
        fq_add_.assign(std::size_t{q_} * q_, 0);
        fq_mul_.assign(std::size_t{q_} * q_, 0);
        fq_neg_.assign(q_, 0);
        fq_inv_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            const auto da = fq_digits(a);
            detail::FpPoly nd(m_, 0);
            for (std::uint32_t i = 0; i < m_; ++i) nd[i] = (p_ - da[i]) % p_;
            fq_neg_[a] = static_cast<std::uint16_t>(fq_index(nd));
            for (std::uint32_t b = 0; b < q_; ++b) {
                const auto db = fq_digits(b);
                detail::FpPoly sum(m_, 0);
                for (std::uint32_t i = 0; i < m_; ++i) sum[i] = (da[i] + db[i]) % p_;
                fq_add_[a * q_ + b] = static_cast<std::uint16_t>(fq_index(sum));
                detail::FpPoly prod(2 * m_ - 1, 0);
                for (std::uint32_t i = 0; i < m_; ++i)
                    for (std::uint32_t j = 0; j < m_; ++j)
                        prod[i + j] = static_cast<std::uint32_t>(
                            (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
                fq_mul_[a * q_ + b] = static_cast<std::uint16_t>(fq_index(detail::fp_mod(prod, base_modulus_, p_)));
            }
        }
        for (std::uint32_t a = 1; a < q_; ++a)
            for (std::uint32_t b = 1; b < q_; ++b)
                if (fq_mul_[a * q_ + b] == 1) {
                    fq_inv_[a] = static_cast<std::uint16_t>(b);
                    break;
                }
    }

    void choose_top_modulus() {
        // First (b, c) in lexicographic index order with y² + b·y + c
        // root-free over F_q; degree 2 makes root-freeness equal to
        // irreducibility, checked exhaustively.
        for (std::uint32_t b = 0; b < q_; ++b)
            for (std::uint32_t c = 0; c < q_; ++c) {
                bool has_root = false;
                for (std::uint32_t e = 0; e < q_ && !has_root; ++e) {
                    const std::uint32_t val = fq_add_[fq_add_[fq_mul_[e * q_ + e] * q_ + fq_mul_[b * q_ + e]] * q_ + c];
                    has_root = (val == 0);
                }
                if (!has_root) {
                    top_b_ = b;
                    top_c_ = c;
                    return;
                }
            }
        internal_check(false, "no irreducible top modulus found");
    }

    void build_frobenius_and_norm() {
        frob_.assign(q2_, 0);
        norm_.assign(q2_, 0);
        for (std::uint32_t i = 0; i < q2_; ++i) {
            frob_[i] = pow(Elt(i), q_).index();
            const Elt n = mul(Elt(i), Elt(frob_[i]));
            internal_check(n.index() < q_, "norm value escaped the base field");
            norm_[i] = n.index();
        }
    }

    void find_generator() {
        std::vector<std::uint32_t> prime_factors;
        std::uint32_t rem = q2_ - 1;
        for (std::uint32_t d = 2; d * d <= rem; ++d)
            while (rem % d == 0) {
                if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
                rem /= d;
            }
        if (rem > 1) prime_factors.push_back(rem);
        for (std::uint32_t i = 1; i < q2_; ++i) {
            const Elt g(i);
            bool primitive = pow(g, q2_ - 1) == Elt(1);
            for (const std::uint32_t r : prime_factors)
                primitive = primitive && pow(g, (q2_ - 1) / r) != Elt(1);
            if (primitive) {
                generator_ = g;
                return;
            }
        }
        internal_check(false, "no generator of F_{q^2}* found");
    }

    std::uint32_t p_, m_, q_ = 0, q2_ = 0;
    std::vector<std::uint32_t> base_modulus_;
    std::uint32_t top_b_ = 0, top_c_ = 0;
    Elt generator_;
    std::vector<std::uint16_t> fq_add_, fq_mul_, fq_neg_, fq_inv_;
    std::vector<std::uint32_t> frob_, norm_;
};

/// Convenience wrapper matching the operation name used throughout.
inline FieldTower build_tower(std::uint32_t p, std::uint32_t m, std::uint64_t size_cap = default_tower_cap) {
    return FieldTower(p, m, size_cap);
}

}  // namespace hermgrs

#endif
