#include "sklie/matrix.hpp"

#include <sstream>

#include "sklie/error.hpp"

namespace sklie {

static void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(errc::dimension_mismatch, std::string(op) + ": shapes " +
                                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                           " vs " + std::to_string(b.rows()) + "x" +
                                           std::to_string(b.cols()));
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(errc::dimension_mismatch, "vector addition");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(errc::dimension_mismatch, "vector subtraction");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) fail(errc::dimension_mismatch, "ragged matrix literal");
        for (const auto& x : r) a_.push_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t ambient, const std::vector<Vec>& cols) {
    Matrix m(ambient, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != ambient) fail(errc::dimension_mismatch, "column length");
        for (std::size_t i = 0; i < ambient; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
    if (v.size() != rows_) fail(errc::dimension_mismatch, "set_col length");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rational Matrix::trace() const {
    if (!is_square()) fail(errc::dimension_mismatch, "trace of non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool Matrix::is_skew() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_shape(*this, o, "matrix addition");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_shape(*this, o, "matrix subtraction");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "matrix product");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = c * m.at(i, j);
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) fail(errc::dimension_mismatch, "matrix-vector product");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s;
        for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace sklie
