#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vq/core/errors.hpp"
#include "vq/core/int.hpp"
#include "vq/core/rat.hpp"
#include "vq/core/ring.hpp"

namespace vq {

// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Basis of the right kernel of `mat`, found by fraction-free Gauss-Jordan
// elimination on the row-wise denominator-cleared integer matrix. Each basis
// vector is primitive integral with a positive entry at its free column.
std::vector<std::vector<Rat>> rat_nullspace(const Matrix<Rat>& mat);

// Same contract over an arbitrary field by plain Gauss-Jordan with division.
// Each vector has a 1 at its free column. `zero` supplies the field context.
template <Field F>
std::vector<std::vector<F>> field_nullspace(Matrix<F> m, const F& zero) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const F one = ring_one_like(zero);
    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::optional<std::size_t> found;
        for (std::size_t r = pr; r < rows; ++r) {
            if (!detail::coeff_is_zero(m(r, c))) {
                found = r;
                break;
            }
        }
        if (!found) continue;
        if (*found != pr) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(*found, j), m(pr, j));
        }
        const F inv = one / m(pr, c);
        for (std::size_t j = c; j < cols; ++j) m(pr, j) = m(pr, j) * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || detail::coeff_is_zero(m(r, c))) continue;
            const F f = m(r, c);
            for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) - f * m(pr, j);
        }
        pivot_cols.push_back(c);
        ++pr;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(cols, zero);
        v[f] = one;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace vq
