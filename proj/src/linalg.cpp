#include "sklie/linalg.hpp"

#include "sklie/error.hpp"

namespace sklie {

Matrix rref(Matrix m, std::vector<std::size_t>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Rational inv = m.at(r, c).reciprocal();
        for (std::size_t j = 0; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Rational f = m.at(i, c);
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return m;
}

std::size_t rank(const Matrix& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

std::vector<Vec> nullspace(const Matrix& m) {
    std::vector<std::size_t> pivots;
    const Matrix r = rref(m, &pivots);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = 1;
        for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r.at(row, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational det(const Matrix& m) {
    if (!m.is_square()) fail(errc::dimension_mismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    Matrix a = m;
    Rational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a.at(piv, c).is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        const Rational inv = a.at(c, c).reciprocal();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            const Rational f = a.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return d;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) fail(errc::dimension_mismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    // Gauss-Jordan on [m | I].
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots;
    aug = rref(std::move(aug), &pivots);
    if (pivots.size() != n || (n > 0 && pivots.back() >= n))
        fail(errc::singular_matrix, "matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) fail(errc::dimension_mismatch, "solve rhs length");
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, cols) = b[i];
    }
    std::vector<std::size_t> pivots;
    aug = rref(std::move(aug), &pivots);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
    Vec x(cols);
    for (std::size_t row = 0; row < pivots.size(); ++row) x[pivots[row]] = aug.at(row, cols);
    return x;
}

Signature congruence_signature(const Matrix& m) {
    if (!m.is_square()) fail(errc::dimension_mismatch, "signature of non-square matrix");
    if (!m.is_symmetric()) fail(errc::not_symmetric, "signature requires a symmetric matrix");
    const std::size_t n = m.rows();
    Matrix a = m;
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (a.at(k, k).is_zero()) {
            // Prefer swapping in a later nonzero diagonal entry.
            std::size_t l = k + 1;
            while (l < n && a.at(l, l).is_zero()) ++l;
            if (l < n) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(l, j));
                for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, l));
            } else {
                // All remaining diagonal entries vanish: find an off-diagonal
                // hyperbolic pair a(i,l) != 0 and fold row/col l into i to
                // manufacture a diagonal pivot (2 a(i,l) != 0 in char 0).
                std::size_t pi = n, pl = n;
                for (std::size_t i = k; i < n && pi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (!a.at(i, j).is_zero()) {
                            pi = i;
                            pl = j;
                            break;
                        }
                if (pi == n) {
                    sig.zero += n - k;
                    break;
                }
                if (pi != k) {
                    for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pi, j));
                    for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, pi));
                }
                for (std::size_t j = 0; j < n; ++j) a.at(k, j) += a.at(pl, j);
                for (std::size_t i = 0; i < n; ++i) a.at(i, k) += a.at(i, pl);
            }
        }
        const Rational pivot = a.at(k, k);
        if (pivot.sign() > 0)
            ++sig.positive;
        else
            ++sig.negative;
        // Symmetric elimination of row/column k below the pivot.
        const Rational inv = pivot.reciprocal();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            const Rational f = a.at(i, k) * inv;
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            for (std::size_t j = 0; j < n; ++j) a.at(j, i) -= f * a.at(j, k);
        }
    }
    return sig;
}

}  // namespace sklie
