#include "vq/core/nullspace.hpp"

namespace vq {

namespace {

void divide_by_content(std::vector<Int>& row) {
    Int g(0);
    for (const auto& v : row) {
        if (!v.is_zero()) g = gcd(g, v);
        if (g.is_one()) return;
    }
    if (g.is_zero() || g.is_one()) return;
    for (auto& v : row) {
        if (!v.is_zero()) v = divexact(v, g);
    }
}

} // namespace

std::vector<std::vector<Rat>> rat_nullspace(const Matrix<Rat>& mat) {
    const std::size_t rows = mat.rows();
    const std::size_t cols = mat.cols();

    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Int den(1);
        for (std::size_t c = 0; c < cols; ++c) den = lcm(den, mat(r, c).den());
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = mat(r, c).num() * divexact(den, mat(r, c).den());
        divide_by_content(m[r]);
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        // Smallest nonzero magnitude keeps the cross-multiplied entries small.
        std::optional<std::size_t> best;
        for (std::size_t r = pr; r < rows; ++r) {
            if (m[r][c].is_zero()) continue;
            if (!best || abs(m[r][c]) < abs(m[*best][c])) best = r;
        }
        if (!best) continue;
        std::swap(m[*best], m[pr]);
        const Int pivot = m[pr][c];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][c].is_zero()) continue;
            const Int f = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = pivot * m[r][j] - f * m[pr][j];
            divide_by_content(m[r]);
        }
        pivot_cols.push_back(c);
        ++pr;
    }

    // Rows 0..rank-1 are now reduced: pivot column entries vanish off-diagonal.
    Int scale(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) scale = lcm(scale, m[i][pivot_cols[i]]);
    scale = abs(scale);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Int> v(cols, Int(0));
        v[f] = scale;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = -divexact(m[i][f] * scale, m[i][pivot_cols[i]]);
        }
        divide_by_content(v);
        std::vector<Rat> out;
        out.reserve(cols);
        for (auto& x : v) out.emplace_back(x);
        basis.push_back(std::move(out));
    }
    return basis;
}

} // namespace vq
