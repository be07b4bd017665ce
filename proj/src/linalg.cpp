#include "evolab/linalg.hpp"

#include <stdexcept>

namespace evolab {

std::size_t rref(GMat& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        GaussianRational inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            GaussianRational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return r;
}

std::size_t rank(GMat m) { return rref(m); }

GaussianRational det(GMat m) {
    std::size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw std::domain_error("det: matrix not square");
    GaussianRational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return GaussianRational();
        if (piv != c) {
            std::swap(m[c], m[piv]);
            d = -d;
        }
        d *= m[c][c];
        GaussianRational inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            GaussianRational f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

bool is_invertible(const GMat& m) { return !det(m).is_zero(); }

std::optional<GVec> solve(GMat a, GVec b) {
    std::size_t n = a.size();
    if (b.size() != n) throw std::domain_error("solve: size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::domain_error("solve: matrix not square");
        a[i].push_back(b[i]);
    }
    if (rref(a) != n) return std::nullopt;
    GVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

} // namespace evolab
