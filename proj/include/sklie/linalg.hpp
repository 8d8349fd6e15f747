#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sklie/matrix.hpp"

namespace sklie {

/// Reduced row echelon form. If pivot_cols is non-null it receives the pivot
/// column indices in row order.
Matrix rref(Matrix m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const Matrix& m);

/// Canonical basis of {v : m v = 0}, derived from the reduced row echelon
/// form: one vector per free column (ascending), with a 1 in the free
/// coordinate. Deterministic, suitable for golden tests.
std::vector<Vec> nullspace(const Matrix& m);

Rational det(const Matrix& m);

/// Inverse of a square matrix; throws Error(SingularMatrix) if det = 0.
Matrix inverse(const Matrix& m);

/// One solution of m x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
    }
};

/// Sylvester signature of a symmetric matrix, computed by symmetric Gaussian
/// congruence (simultaneous row/column operations), entirely over Q.
/// Throws Error(NotSymmetric) for non-symmetric input.
Signature congruence_signature(const Matrix& m);

}  // namespace sklie
