#include "sklie/algebra.hpp"

#include "sklie/error.hpp"

namespace sklie {

std::vector<std::string> default_basis_names(std::size_t dim) {
    std::vector<std::string> names;
    names.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    return names;
}

LieAlgebra::LieAlgebra(std::size_t dim_, Tensor3 bracket_, std::vector<std::string> names)
    : dim(dim_), bracket(std::move(bracket_)), basis_names(std::move(names)) {
    if (bracket.n1() != dim || bracket.n2() != dim || bracket.n3() != dim)
        fail(errc::dimension_mismatch, "bracket tensor does not match algebra dimension");
    if (basis_names.empty()) basis_names = default_basis_names(dim);
    if (basis_names.size() != dim)
        fail(errc::dimension_mismatch, "basis name count does not match algebra dimension");
}

BilinearForm::BilinearForm(Matrix m, Kind kind_) : dim(m.rows()), matrix(std::move(m)), kind(kind_) {
    if (matrix.rows() != matrix.cols())
        fail(errc::dimension_mismatch, "bilinear form matrix must be square");
    if (kind == Kind::skew && !matrix.is_skew())
        fail(errc::not_skew, "form declared skew has a symmetric part");
    if (kind == Kind::symmetric && !matrix.is_symmetric())
        fail(errc::not_symmetric, "form declared symmetric has a skew part");
}

Rational BilinearForm::eval(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim)
        fail(errc::dimension_mismatch, "bilinear form applied to vectors of wrong dimension");
    Rational acc;
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            acc += x[i] * matrix.at(i, j) * y[j];
        }
    }
    return acc;
}

LinearMap::LinearMap(Matrix m) : dim(m.rows()), matrix(std::move(m)) {
    if (matrix.rows() != matrix.cols())
        fail(errc::dimension_mismatch, "linear map matrix must be square");
}

ProductTable::ProductTable(Tensor3 t) : dim(t.n1()), tensor(std::move(t)) {
    if (tensor.n1() != tensor.n2() || tensor.n2() != tensor.n3())
        fail(errc::dimension_mismatch, "product table must be a cubic tensor");
}

const VerificationItem* VerificationReport::find(const std::string& axiom) const {
    for (const auto& item : items)
        if (item.axiom == axiom) return &item;
    return nullptr;
}

std::string VerificationReport::first_failure() const {
    for (const auto& item : items)
        if (!item.passed) return item.axiom;
    return {};
}

VerificationReport VerificationReport::of(std::vector<VerificationItem> items) {
    VerificationReport report;
    report.certified = true;
    for (const auto& item : items) report.certified = report.certified && item.passed;
    report.items = std::move(items);
    return report;
}

}  // namespace sklie
