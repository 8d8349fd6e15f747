#include "sklie/tensor3.hpp"

#include "sklie/error.hpp"

namespace sklie {

Vec Tensor3::pair(std::size_t i, std::size_t j) const {
    Vec v(n3_);
    for (std::size_t k = 0; k < n3_; ++k) v[k] = at(i, j, k);
    return v;
}

void Tensor3::set_pair(std::size_t i, std::size_t j, const Vec& v) {
    if (v.size() != n3_) fail(errc::dimension_mismatch, "tensor pair length");
    for (std::size_t k = 0; k < n3_; ++k) at(i, j, k) = v[k];
}

Matrix Tensor3::left_slice(std::size_t i) const {
    Matrix m(n3_, n2_);
    for (std::size_t j = 0; j < n2_; ++j)
        for (std::size_t k = 0; k < n3_; ++k) m.at(k, j) = at(i, j, k);
    return m;
}

Vec Tensor3::eval(const Vec& x, const Vec& y) const {
    if (x.size() != n1_ || y.size() != n2_) fail(errc::dimension_mismatch, "tensor eval");
    Vec r(n3_);
    for (std::size_t i = 0; i < n1_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n2_; ++j) {
            if (y[j].is_zero()) continue;
            const Rational c = x[i] * y[j];
            for (std::size_t k = 0; k < n3_; ++k) r[k] += c * at(i, j, k);
        }
    }
    return r;
}

bool Tensor3::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace sklie
