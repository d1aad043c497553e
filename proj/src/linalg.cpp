#include "mixjoin/matrix.hpp"

#include <utility>

namespace mixjoin {

namespace {

struct Echelon {
    QMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    int swaps = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
Echelon rref(QMatrix m) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
            ++e.swaps;
        }
        GaussianRational inv = GaussianRational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            GaussianRational f = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

} // namespace

GaussianRational determinant(const QMatrix& m) {
    if (!m.is_square()) throw InputError("determinant of a non-square matrix");
    QMatrix a = m;
    std::size_t n = a.rows();
    GaussianRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return GaussianRational();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        GaussianRational inv = GaussianRational(1) / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            GaussianRational f = a(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivot_cols.size(); }

QMatrix nullspace(const QMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis(f, k) = GaussianRational(1);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) basis(e.pivot_cols[r], k) = -e.reduced(r, f);
    }
    return basis;
}

QMatrix inverse(const QMatrix& m) {
    if (!m.is_square()) throw InputError("inverse of a non-square matrix");
    std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, QMatrix::identity(n));
    Echelon e = rref(aug);
    if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1))
        throw DomainError("matrix is singular");
    return e.reduced.block(0, n, n, n);
}

bool is_integer_matrix(const QMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_integer()) return false;
    return true;
}

} // namespace mixjoin
