#include "sklie/rational.hpp"

#include <cctype>
#include <ostream>

namespace sklie {

Rational::Rational(long num, long den) : v_(static_cast<signed long>(num)) {
    if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
    v_ /= mpq_class(static_cast<signed long>(den));
}

Rational Rational::parse(const std::string& text) {
    // Strict grammar: '-'? digits ('/' digits)? — no whitespace, no '+', no floats.
    const auto bad = [&]() -> Rational {
        fail(errc::parse_error, "malformed rational '" + text + "'");
    };
    if (text.empty()) bad();
    std::size_t pos = 0;
    if (text[0] == '-') pos = 1;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) bad();
    std::string den_part;
    if (pos < text.size()) {
        if (text[pos] != '/') bad();
        den_part = text.substr(pos + 1);
        if (den_part.empty()) bad();
        for (char c : den_part)
            if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    }
    mpq_class v;
    if (v.set_str(text, 10) != 0) bad();
    if (!den_part.empty() && v.get_den() == 0)
        fail(errc::parse_error, "zero denominator in rational '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::reciprocal() const {
    if (is_zero()) fail(errc::division_by_zero, "reciprocal of zero");
    return Rational(1 / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(errc::division_by_zero, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sklie
