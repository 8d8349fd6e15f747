#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "sklie/error.hpp"

namespace sklie {

/// Exact rational scalar, always stored in lowest terms with positive
/// denominator (0 is 0/1). Thin value wrapper over GMP's mpq_class.
///
/// Serializes as a decimal integer "p" when the denominator is 1 and as
/// "p/q" otherwise; parsing is strict: no whitespace, no floats, no zero
/// denominators.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit on purpose
    Rational(int n) : v_(static_cast<signed long>(n)) {}   // NOLINT
    Rational(long num, long den);

    /// Strict parse of "p" or "p/q" (optional leading '-' on p only).
    static Rational parse(const std::string& text);

    std::string str() const { return v_.get_str(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(v_)); }
    Rational reciprocal() const;

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

}  // namespace sklie
