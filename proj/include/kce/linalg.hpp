#pragma once

#include "kce/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace kce {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(std::initializer_list<std::initializer_list<long>> init);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_symmetric() const;
    ExactMatrix transpose() const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

// Bareiss elimination with row pivoting.
Rational determinant(const ExactMatrix& m);

// det of the leading k x k blocks, k = 1..n.
std::vector<Rational> leading_principal_minors(const ExactMatrix& m);

struct RankKernel {
    std::size_t rank = 0;
    // Basis of the right kernel; each vector is primitive integral with a
    // positive last nonzero entry.
    std::vector<std::vector<Rational>> kernel;
};

// Fraction-free (Bareiss) row echelon form, then exact back substitution.
RankKernel rank_kernel(const ExactMatrix& m);

}  // namespace kce
