#include "satake/rational_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace satake {

namespace {

void check_rect(const RatMat& a) {
    if (a.empty()) throw std::invalid_argument("empty matrix");
    for (const auto& row : a)
        if (row.size() != a.front().size())
            throw std::invalid_argument("ragged matrix");
}

Int floor_div(const Int& a, const Int& b) {
    // b > 0 assumed.  cpp_int division truncates toward zero.
    Int q = a / b;
    if (a % b < 0) --q;
    return q;
}

}  // namespace

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    check_rect(a);
    check_rect(b);
    const std::size_t n = a.size(), k = b.size(), m = b.front().size();
    if (a.front().size() != k) throw std::invalid_argument("dimension mismatch in mat_mul");
    RatMat c(n, RatVec(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

RatVec mat_vec(const RatMat& a, const RatVec& v) {
    check_rect(a);
    if (a.front().size() != v.size()) throw std::invalid_argument("dimension mismatch in mat_vec");
    RatVec r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

RatMat transpose(const RatMat& a) {
    check_rect(a);
    RatMat t(a.front().size(), RatVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.front().size(); ++j) t[j][i] = a[i][j];
    return t;
}

RatMat identity_matrix(std::size_t n) {
    RatMat e(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
    return e;
}

RatVec solve_linear(const RatMat& a, const RatVec& b) {
    check_rect(a);
    const std::size_t n = a.size();
    if (a.front().size() != n || b.size() != n)
        throw std::invalid_argument("solve_linear expects a square system");
    RatMat m = a;
    RatVec r = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix in solve_linear");
        std::swap(m[piv], m[col]);
        std::swap(r[piv], r[col]);
        const Rat inv = Rat(1) / m[col][col];
        for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
        r[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
            r[i] -= f * r[col];
        }
    }
    return r;
}

RatMat invert(const RatMat& a) {
    check_rect(a);
    const std::size_t n = a.size();
    if (a.front().size() != n) throw std::invalid_argument("invert expects a square matrix");
    RatMat m = a;
    RatMat inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix in invert");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Rat f0 = Rat(1) / m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= f0;
            inv[col][j] *= f0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<RatVec> kernel_basis(const RatMat& a) {
    check_rect(a);
    const std::size_t rows = a.size(), cols = a.front().size();
    RatMat m = a;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const Rat inv = Rat(1) / m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Int lcm_of_denominators(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
    return l;
}

Int lcm_of_denominators(const RatMat& a) {
    Int l = 1;
    for (const auto& row : a) l = boost::multiprecision::lcm(l, lcm_of_denominators(row));
    return l;
}

IntMat column_hnf(const IntMat& a) {
    if (a.empty() || a.front().empty()) throw std::invalid_argument("empty matrix in column_hnf");
    const std::size_t rows = a.size(), cols = a.front().size();
    IntMat h = a;
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(h[i][x], h[i][y]);
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) h[i][dst] += f * h[i][src];
    };
    std::size_t lead = 0;
    for (std::size_t row = 0; row < rows && lead < cols; ++row) {
        // Euclidean elimination among columns lead..cols-1 in this row.
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = lead; j < cols; ++j) {
                if (h[row][j] == 0) continue;
                if (best == cols || abs(h[row][j]) < abs(h[row][best])) best = j;
            }
            if (best == cols) break;  // whole row segment is zero
            if (best != lead) swap_cols(lead, best);
            bool clean = true;
            for (std::size_t j = lead + 1; j < cols; ++j) {
                if (h[row][j] == 0) continue;
                addmul_col(j, lead, -(h[row][j] / h[row][lead]));
                if (h[row][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (h[row][lead] == 0) continue;
        if (h[row][lead] < 0)
            for (std::size_t i = 0; i < rows; ++i) h[i][lead] = -h[i][lead];
        for (std::size_t j = 0; j < lead; ++j)
            addmul_col(j, lead, -floor_div(h[row][j], h[row][lead]));
        ++lead;
    }
    if (lead < rows) throw std::domain_error("column_hnf needs a full-rank column lattice");
    for (auto& r : h) r.resize(rows);
    return h;
}

}  // namespace satake
