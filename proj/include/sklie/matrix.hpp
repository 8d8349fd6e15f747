#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sklie/rational.hpp"

namespace sklie {

/// Coordinate vector with exact rational entries.
using Vec = std::vector<Rational>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
bool vec_is_zero(const Vec& a);

/// Dense row-major matrix over Rational.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    /// Row-major construction from nested braces (rows must be equal length).
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t ambient, const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    Vec col(std::size_t j) const;
    Vec row(std::size_t i) const;
    void set_col(std::size_t j, const Vec& v);

    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_skew() const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Matrix–vector product (v as a column).
    Vec apply(const Vec& v) const;

    std::string str() const;  // compact human-readable form for diagnostics

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Commutator a·b − b·a (square matrices of equal size).
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace sklie
