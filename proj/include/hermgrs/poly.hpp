#ifndef HERMGRS_POLY_HPP
#define HERMGRS_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hermgrs/gf.hpp"

namespace hermgrs {

/// Dense univariate polynomial over F_{q²}. Coefficients are stored low
/// degree first with no trailing zeros; the zero polynomial is the empty
/// vector and its degree is a distinguished "−∞" (see degree_at_most).
/// Immutable value semantics: operations allocate fresh results.
class Poly {
   public:
    explicit Poly(const FieldTower& tower) : tower_(&tower) {}
    Poly(const FieldTower& tower, std::vector<Elt> coeffs) : tower_(&tower), coeffs_(std::move(coeffs)) { prune(); }

    static Poly constant(const FieldTower& tower, Elt c) { return Poly(tower, {c}); }
    /// The monomial x.
    static Poly x(const FieldTower& tower) { return Poly(tower, {Elt(0), Elt(1)}); }

    [[nodiscard]] const FieldTower& tower() const noexcept { return *tower_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; calling this on zero is a defect.
    [[nodiscard]] std::size_t degree() const {
        internal_check(!is_zero(), "degree of the zero polynomial is not a number");
        return coeffs_.size() - 1;
    }
    /// True iff deg ≤ d, with deg(zero) = −∞ below every bound.
    [[nodiscard]] bool degree_at_most(std::size_t d) const noexcept { return coeffs_.size() <= d + 1; }
    [[nodiscard]] Elt coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elt(0); }
    [[nodiscard]] Elt leading() const { return coeffs_.at(degree()); }
    [[nodiscard]] bool is_monic() const { return !is_zero() && leading() == Elt(1); }
    [[nodiscard]] const std::vector<Elt>& coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] Elt eval(Elt at) const noexcept {
        Elt acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = tower_->add(tower_->mul(acc, at), coeffs_[i]);
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Elt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Elt(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.tower_->add(a.coeff(i), b.coeff(i));
        return Poly(*a.tower_, std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Elt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Elt(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.tower_->sub(a.coeff(i), b.coeff(i));
        return Poly(*a.tower_, std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(*a.tower_);
        std::vector<Elt> c(a.coeffs_.size() + b.coeffs_.size() - 1, Elt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = a.tower_->add(c[i + j], a.tower_->mul(a.coeffs_[i], b.coeffs_[j]));
        return Poly(*a.tower_, std::move(c));
    }
    [[nodiscard]] Poly scaled(Elt s) const {
        std::vector<Elt> c(coeffs_);
        for (auto& ci : c) ci = tower_->mul(ci, s);
        return Poly(*tower_, std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.coeffs_ == b.coeffs_; }

   private:
    void prune() {
        while (!coeffs_.empty() && coeffs_.back() == Elt(0)) coeffs_.pop_back();
    }

    const FieldTower* tower_;
    std::vector<Elt> coeffs_;
};

/// Monic polynomial of degree |roots| vanishing exactly on the given set.
inline Poly from_roots(const FieldTower& t, std::span<const Elt> roots) {
    std::vector<Elt> sorted(roots.begin(), roots.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(Errc::duplicate_root, "roots must be pairwise distinct");
    Poly acc = Poly::constant(t, Elt(1));
    for (const Elt r : roots) acc = acc * Poly(t, {t.neg(r), Elt(1)});
    return acc;
}

/// Formal derivative; the integer multiplier i+1 is reduced into the prime
/// subfield.
inline Poly derivative(const Poly& f) {
    const FieldTower& t = f.tower();
    if (f.degree_at_most(0)) return Poly(t);
    std::vector<Elt> c(f.degree(), Elt(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = t.mul(t.from_int(i + 1), f.coeff(i + 1));
    return Poly(t, std::move(c));
}

/// The Lagrange basis polynomial through the given nodes that is 1 at
/// nodes[i] and 0 at every other node.
inline Poly lagrange_basis(const FieldTower& t, std::span<const Elt> nodes, std::size_t i) {
    Poly num = Poly::constant(t, Elt(1));
    Elt den(1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j == i) continue;
        num = num * Poly(t, {t.neg(nodes[j]), Elt(1)});
        den = t.mul(den, t.sub(nodes[i], nodes[j]));
    }
    return num.scaled(t.inv(den));
}

/// Unique polynomial of degree < |points| through all points, assembled from
/// the explicit Lagrange basis.
inline Poly interpolate(const FieldTower& t, std::span<const std::pair<Elt, Elt>> points) {
    std::vector<Elt> xs;
    xs.reserve(points.size());
    for (const auto& [x, y] : points) xs.push_back(x);
    std::vector<Elt> sorted(xs);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(Errc::duplicate_node, "interpolation nodes must be pairwise distinct");
    Poly acc(t);
    for (std::size_t i = 0; i < points.size(); ++i) acc = acc + lagrange_basis(t, xs, i).scaled(points[i].second);
    return acc;
}

/// Remainder of f modulo G; degree(result) < degree(G) and f ≡ result (mod G).
inline Poly mod_reduce(const Poly& f, const Poly& G) {
    if (G.is_zero()) fail(Errc::division_by_zero_poly, "reduction modulo the zero polynomial");
    const FieldTower& t = f.tower();
    const std::size_t dg = G.degree();
    const Elt lead_inv = t.inv(G.leading());
    std::vector<Elt> r(f.coeffs());
    while (r.size() > dg) {
        const Elt c = t.mul(r.back(), lead_inv);
        const std::size_t shift = r.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) r[shift + i] = t.sub(r[shift + i], t.mul(c, G.coeff(i)));
        while (!r.empty() && r.back() == Elt(0)) r.pop_back();
    }
    return Poly(t, std::move(r));
}

/// All e ∈ F_{q²} with f(e) = 0, ascending, by exhaustive scan; multiplicities
/// are ignored. The scan over the whole field is the correctness argument.
inline std::vector<Elt> roots_in_field(const Poly& f) {
    if (f.is_zero()) fail(Errc::zero_polynomial, "every element is a root of the zero polynomial");
    const FieldTower& t = f.tower();
    std::vector<Elt> out;
    for (std::uint32_t i = 0; i < t.q2(); ++i)
        if (f.eval(Elt(i)) == Elt(0)) out.push_back(Elt(i));
    return out;
}

}  // namespace hermgrs

#endif
