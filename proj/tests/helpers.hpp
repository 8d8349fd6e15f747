#pragma once

// Shared test utilities: an independent rank oracle (Bareiss fraction-free
// elimination, deliberately a different algorithm than the library's rref),
// deterministic random data generators, and paths to the CLI binary and the
// shipped fixture files (baked in at configure time, overridable by env).

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "sklie/matrix.hpp"
#include "sklie/rational.hpp"
#include "sklie/special_kahler.hpp"

namespace testutil {

using sklie::Matrix;
using sklie::Rational;
using sklie::Vec;

/// Rank by Bareiss fraction-free elimination with full pivot search.
inline std::size_t bareiss_rank(Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    Rational prev_pivot(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot_row = r;
        while (pivot_row < rows && m(pivot_row, c).is_zero()) ++pivot_row;
        if (pivot_row == rows) continue;
        if (pivot_row != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(pivot_row, k));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t k = c + 1; k < cols; ++k)
                m(i, k) = (m(r, c) * m(i, k) - m(i, c) * m(r, k)) / prev_pivot;
            m(i, c) = Rational(0);
        }
        prev_pivot = m(r, c);
        ++r;
    }
    return r;
}

/// Flattens matrices (row-major) into the rows of one big matrix; used to
/// measure independence of a set of matrices with the oracle above.
inline Matrix stack_flattened(const std::vector<Matrix>& ms) {
    if (ms.empty()) return Matrix(0, 0);
    const std::size_t n = ms[0].rows() * ms[0].cols();
    Matrix out(ms.size(), n);
    for (std::size_t t = 0; t < ms.size(); ++t)
        for (std::size_t i = 0; i < ms[t].rows(); ++i)
            for (std::size_t j = 0; j < ms[t].cols(); ++j)
                out(t, i * ms[t].cols() + j) = ms[t](i, j);
    return out;
}

/// Small random rational with numerator in [-bound, bound] and denominator
/// in [1, 3].
inline Rational random_rational(std::mt19937& rng, int bound = 3) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng)) / Rational(den(rng));
}

inline Vec random_vec(std::mt19937& rng, std::size_t n, int bound = 3) {
    Vec v(n, Rational(0));
    for (auto& x : v) x = random_rational(rng, bound);
    return v;
}

/// Random invertible matrix as a product of unitriangular matrices: always
/// nonsingular, no retry loop needed.
inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
    Matrix upper = Matrix::identity(n);
    Matrix lower = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            upper(i, j) = random_rational(rng, 2);
            lower(j, i) = random_rational(rng, 2);
        }
    return lower * upper;
}

inline std::string cli_path() {
    if (const char* p = std::getenv("SKLIE_CLI")) return p;
#ifdef SKLIE_CLI_PATH
    return SKLIE_CLI_PATH;
#else
    return "./sklie";
#endif
}

inline std::string fixtures_dir() {
    if (const char* p = std::getenv("SKLIE_FIXTURE_FILES")) return p;
#ifdef SKLIE_FIXTURES_DIR
    return SKLIE_FIXTURES_DIR;
#else
    return "fixtures";
#endif
}

}  // namespace testutil
