#pragma once

// Internal dense rational elimination helpers shared by the module builder
// and the intertwiner solver.  Not installed.

#include <utility>
#include <vector>

#include "pierirank/integers.hpp"

namespace pierirank::detail {

using RatMat = std::vector<std::vector<Rat>>;  // row-major dense

/// Row-reduces m in place; returns pivot column per eliminated row.
inline std::vector<int> row_reduce(RatMat& m) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    return pivot_cols;
}

/// Kernel basis (column vectors) of the dense matrix.
inline std::vector<std::vector<Rat>> kernel_basis(RatMat m, size_t cols) {
    std::vector<int> pivots = row_reduce(m);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<std::vector<Rat>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            size_t pc = static_cast<size_t>(pivots[r]);
            if (free_c < m[r].size()) v[pc] = -m[r][free_c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Scales a rational vector to primitive integers with the first nonzero
/// entry positive.  Zero vectors stay zero.
inline std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
    Int den = 1;
    for (const auto& x : v) den = lcm(den, Int(x.get_den()));
    std::vector<Int> out(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(den);
        scaled.canonicalize();
        out[i] = scaled.get_num();
        g = gcd(g, out[i]);
    }
    if (g == 0) return out;
    int sign = 0;
    for (const auto& x : out) {
        if (x != 0) { sign = x > 0 ? 1 : -1; break; }
    }
    if (sign < 0) g = -g;
    for (auto& x : out) x = divexact(x, g);
    return out;
}

}  // namespace pierirank::detail
