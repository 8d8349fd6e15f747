#pragma once

#include <cstddef>
#include <vector>

#include "sklie/matrix.hpp"

namespace sklie {

/// Dense 3-index tensor over Rational, indexed (i, j, k).
///
/// Used for structure constants: entry (i, j, k) is the e_k coefficient of
/// [e_i, e_j] (brackets) or of e_i · e_j (left-symmetric products).
class Tensor3 {
public:
    Tensor3() : n1_(0), n2_(0), n3_(0) {}
    Tensor3(std::size_t n1, std::size_t n2, std::size_t n3)
        : n1_(n1), n2_(n2), n3_(n3), a_(n1 * n2 * n3) {}
    static Tensor3 cube(std::size_t n) { return Tensor3(n, n, n); }

    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }
    std::size_t n3() const { return n3_; }

    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return a_[(i * n2_ + j) * n3_ + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[(i * n2_ + j) * n3_ + k];
    }

    /// Entry (i, j, ·) as a coordinate vector (the value of the bilinear map
    /// on the basis pair).
    Vec pair(std::size_t i, std::size_t j) const;
    void set_pair(std::size_t i, std::size_t j, const Vec& v);

    /// Matrix of left multiplication by e_i: M(k, j) = at(i, j, k), so that
    /// M * y gives e_i · y (or ad_{e_i} y for a bracket tensor).
    Matrix left_slice(std::size_t i) const;

    /// Bilinear evaluation on arbitrary coordinate vectors.
    Vec eval(const Vec& x, const Vec& y) const;

    bool is_zero() const;
    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.n3_ == b.n3_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

private:
    std::size_t n1_, n2_, n3_;
    std::vector<Rational> a_;
};

}  // namespace sklie
