#include "kce/linalg.hpp"

#include "kce/error.hpp"

#include <utility>

namespace kce {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

bool ExactMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
    ExactMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Rows scaled by the lcm of their denominators; row scaling preserves rank
// and kernel, and multiplies each minor by a known factor.
IntRows integral_rows(const ExactMatrix& m, Integer* scale_product = nullptr) {
    IntRows rows(m.rows(), std::vector<Integer>(m.cols()));
    if (scale_product) *scale_product = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        if (scale_product) *scale_product *= l;
    }
    return rows;
}

// In-place Bareiss to row echelon form with row swaps. Returns pivot columns;
// `swaps` counts row exchanges.
std::vector<std::size_t> bareiss(IntRows& a, std::size_t cols, int& swaps) {
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    swaps = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            ++swaps;
        }
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;  // exact
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rational determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    Integer scale;
    IntRows a = integral_rows(m, &scale);
    int swaps = 0;
    const auto pivots = bareiss(a, m.cols(), swaps);
    if (pivots.size() < m.rows()) return 0;
    Rational det(a.back().back(), scale);
    det.canonicalize();
    return swaps % 2 ? Rational(-det) : det;
}

std::vector<Rational> leading_principal_minors(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "minors of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> minors;
    minors.reserve(n);
    // Without pivoting, the k-th Bareiss pivot is the k-th leading minor
    // (up to the row scaling). A zero pivot stops that shortcut.
    IntRows a = integral_rows(m);
    std::vector<Integer> row_scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, m(i, j).get_den());
        row_scale[i] = l;
    }
    Integer prev = 1, scale_prefix = 1;
    std::size_t k = 0;
    for (; k < n; ++k) {
        if (a[k][k] == 0) break;
        scale_prefix *= row_scale[k];
        Rational minor(a[k][k], scale_prefix);
        minor.canonicalize();
        minors.push_back(minor);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    for (; k < n; ++k) {
        ExactMatrix block(k + 1, k + 1);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= k; ++j) block(i, j) = m(i, j);
        minors.push_back(determinant(block));
    }
    return minors;
}

RankKernel rank_kernel(const ExactMatrix& m) {
    IntRows a = integral_rows(m);
    int swaps = 0;
    const auto pivots = bareiss(a, m.cols(), swaps);
    RankKernel out;
    out.rank = pivots.size();

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = pivots.size(); r-- > 0;) {
            const std::size_t c = pivots[r];
            Rational acc = 0;
            for (std::size_t j = c + 1; j < m.cols(); ++j)
                if (a[r][j] != 0) acc += Rational(a[r][j]) * v[j];
            v[c] = -acc / Rational(a[r][c]);
        }
        // Primitive integral, last nonzero entry positive.
        Integer den_lcm = 1, num_gcd = 0;
        for (auto& x : v) {
            x.canonicalize();
            den_lcm = lcm(den_lcm, x.get_den());
        }
        for (auto& x : v) num_gcd = gcd(num_gcd, Integer(x.get_num() * (den_lcm / x.get_den())));
        Rational factor(den_lcm, num_gcd);
        for (std::size_t j = m.cols(); j-- > 0;) {
            if (v[j] != 0) {
                if (v[j] < 0) factor = -factor;
                break;
            }
        }
        for (auto& x : v) x *= factor;
        out.kernel.push_back(std::move(v));
    }
    return out;
}

}  // namespace kce
