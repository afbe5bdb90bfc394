#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graph.hpp"

namespace bcp {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<cpp_rational> a;  // row-major

    static RationalMatrix zero(int rows, int cols) {
        if (rows < 0 || cols < 0) throw precondition_error("matrix: negative size");
        RationalMatrix m;
        m.rows = rows;
        m.cols = cols;
        m.a.assign(static_cast<std::size_t>(rows) * cols, 0);
        return m;
    }

    cpp_rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const cpp_rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    RationalMatrix transpose() const {
        RationalMatrix t = zero(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }
};

namespace detail {

// Fraction-free (Bareiss) elimination over the integers: every division below
// is exact, so the rank computation is error-free. Pivot = first row with a
// nonzero entry in the current column, scanning top-down.
inline int rank_bareiss(std::vector<std::vector<cpp_int>>& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    cpp_int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

// Same elimination in 64-bit arithmetic with 128-bit products. Safe for 0/1
// matrices up to 16x16 (all intermediate entries are minors of the input, and
// the Hadamard bound 16^8 keeps them far below 2^63).
inline int rank_bareiss_small(std::int64_t m[16][16], int rows, int cols) {
    std::int64_t prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < cols; ++c) std::swap(m[rank][c], m[piv][c]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                __int128 t = static_cast<__int128>(m[rank][col]) * m[r][c] -
                             static_cast<__int128>(m[r][col]) * m[rank][c];
                m[r][c] = static_cast<std::int64_t>(t / prev);
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace detail

// Exact rank over the rationals: clear each row's denominators, then run
// fraction-free elimination over the integers.
inline int rank_exact(const RationalMatrix& mat) {
    std::vector<std::vector<cpp_int>> m(mat.rows, std::vector<cpp_int>(mat.cols));
    for (int r = 0; r < mat.rows; ++r) {
        cpp_int l = 1;
        for (int c = 0; c < mat.cols; ++c) l = lcm(l, denominator(mat.at(r, c)));
        for (int c = 0; c < mat.cols; ++c)
            m[r][c] = numerator(mat.at(r, c)) * (l / denominator(mat.at(r, c)));
    }
    return detail::rank_bareiss(m);
}

inline RationalMatrix adjacency_matrix(const Graph& g) {
    RationalMatrix m = RationalMatrix::zero(g.n, g.n);
    for (auto [u, v] : g.edges) {
        m.at(u - 1, v - 1) = 1;
        m.at(v - 1, u - 1) = 1;
    }
    return m;
}

// Rank of the adjacency matrix, with a fast 64-bit path for small graphs.
inline int rank_adjacency(const Graph& g) {
    if (g.n <= 16) {
        std::int64_t m[16][16] = {};
        for (auto [u, v] : g.edges) {
            m[u - 1][v - 1] = 1;
            m[v - 1][u - 1] = 1;
        }
        return detail::rank_bareiss_small(m, g.n, g.n);
    }
    return rank_exact(adjacency_matrix(g));
}

// ceil(rank(A)/2): every biclique contributes at most 2 to the rank of the
// sum decomposition, so no biclique partition can be smaller than this.
inline int bp_rank_lower_bound(const Graph& g) {
    return (rank_adjacency(g) + 1) / 2;
}

}  // namespace bcp
