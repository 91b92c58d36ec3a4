#ifndef HERMGRS_MATRIX_HPP
#define HERMGRS_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hermgrs/gf.hpp"

namespace hermgrs {

/// Dense row-major matrix over F_{q²}. Values are immutable in spirit:
/// operations allocate fresh results, so sharing across readers is safe.
class Mat {
   public:
    Mat(const FieldTower& tower, std::size_t rows, std::size_t cols)
        : tower_(&tower), rows_(rows), cols_(cols), data_(rows * cols, Elt(0)) {}

    static Mat identity(const FieldTower& tower, std::size_t n) {
        Mat m(tower, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Elt(1);
        return m;
    }

    [[nodiscard]] const FieldTower& tower() const noexcept { return *tower_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] Elt at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    [[nodiscard]] Elt& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] bool is_zero() const noexcept {
        return std::all_of(data_.begin(), data_.end(), [](Elt e) { return e == Elt(0); });
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        internal_check(a.cols_ == b.rows_, "matrix product shape mismatch");
        const FieldTower& t = *a.tower_;
        Mat c(t, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Elt aik = a.at(i, k);
                if (aik == Elt(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.at(i, j) = t.add(c.at(i, j), t.mul(aik, b.at(k, j)));
            }
        return c;
    }
    friend bool operator==(const Mat& a, const Mat& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    [[nodiscard]] Mat transposed() const {
        Mat m(*tower_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
        return m;
    }

    /// Entry-wise q-power (relative Frobenius applied to every entry).
    [[nodiscard]] Mat frobenius_entrywise() const {
        Mat m(*tower_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = tower_->frobenius(data_[i]);
        return m;
    }

    [[nodiscard]] std::vector<Elt> apply(std::span<const Elt> x) const {
        internal_check(x.size() == cols_, "matrix-vector shape mismatch");
        std::vector<Elt> y(rows_, Elt(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) y[r] = tower_->add(y[r], tower_->mul(at(r, c), x[c]));
        return y;
    }

   private:
    const FieldTower* tower_;
    std::size_t rows_, cols_;
    std::vector<Elt> data_;
};

/// rows×n matrix with entry (i, j) = alpha_j^i; row 0 is all ones.
inline Mat vandermonde(const FieldTower& t, std::span<const Elt> alpha, std::size_t rows) {
    if (rows < 1) fail(Errc::bad_argument, "vandermonde needs at least one row");
    Mat m(t, rows, alpha.size());
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        Elt power(1);
        for (std::size_t i = 0; i < rows; ++i) {
            m.at(i, j) = power;
            power = t.mul(power, alpha[j]);
        }
    }
    return m;
}

struct RrefResult {
    Mat matrix;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by Gaussian elimination with first-nonzero
/// pivoting; exact arithmetic makes pivot-magnitude strategies moot.
inline RrefResult rref(const Mat& m) {
    const FieldTower& t = m.tower();
    Mat r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < r.rows() && r.at(pivot, col) == Elt(0)) ++pivot;
        if (pivot == r.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r.at(row, c), r.at(pivot, c));
        const Elt inv = t.inv(r.at(row, col));
        for (std::size_t c = 0; c < r.cols(); ++c) r.at(row, c) = t.mul(r.at(row, c), inv);
        for (std::size_t other = 0; other < r.rows(); ++other) {
            if (other == row || r.at(other, col) == Elt(0)) continue;
            const Elt factor = r.at(other, col);
            for (std::size_t c = 0; c < r.cols(); ++c)
                r.at(other, c) = t.sub(r.at(other, c), t.mul(factor, r.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

/// Basis of {x : Mx = 0} over F_{q²}, one vector per free column, each scaled
/// so its first nonzero coordinate is 1 and sorted by that free column.
inline std::vector<std::vector<Elt>> kernel(const Mat& m) {
    const FieldTower& t = m.tower();
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Elt>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Elt> x(m.cols(), Elt(0));
        x[free_col] = Elt(1);
        for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivot_cols[r]] = t.neg(rr.matrix.at(r, free_col));
        std::size_t first = 0;
        while (x[first] == Elt(0)) ++first;
        const Elt scale = t.inv(x[first]);
        for (auto& xi : x) xi = t.mul(xi, scale);
        const auto image = m.apply(x);
        internal_check(std::all_of(image.begin(), image.end(), [](Elt e) { return e == Elt(0); }),
                       "kernel vector fails Mx = 0");
        basis.push_back(std::move(x));
    }
    return basis;
}

/// F_q-basis of {x ∈ F_q^cols : Mx = 0}. Each F_{q²} equation splits into two
/// F_q equations through the basis {1, θ}; the doubled system is solved with
/// the same elimination (all entries stay in F_q, which is closed under the
/// field operations used).
inline std::vector<std::vector<Elt>> subfield_kernel(const Mat& m) {
    const FieldTower& t = m.tower();
    Mat doubled(t, 2 * m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto [lo, hi] = t.decode(m.at(r, c));
            doubled.at(2 * r, c) = lo;
            doubled.at(2 * r + 1, c) = hi;
        }
    std::vector<std::vector<Elt>> basis = kernel(doubled);
    for (const auto& vec : basis) {
        for (const Elt e : vec) internal_check(t.is_in_base_field(e), "subfield kernel vector left F_q");
        const auto image = m.apply(vec);
        internal_check(std::all_of(image.begin(), image.end(), [](Elt e) { return e == Elt(0); }),
                       "subfield kernel vector fails Mx = 0");
    }
    return basis;
}

}  // namespace hermgrs

#endif
