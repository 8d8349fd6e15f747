#include "sklie/fixtures.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sklie/constructions.hpp"
#include "sklie/error.hpp"

namespace sklie {

namespace {

void set_bracket(Tensor3& t, std::size_t i, std::size_t j, std::size_t k, Rational c) {
    t.at(i, j, k) = c;
    t.at(j, i, k) = -c;
}

void set_skew(Matrix& m, std::size_t i, std::size_t j, Rational c) {
    m.at(i, j) = c;
    m.at(j, i) = -c;
}

/// j(e_from) = e_to, j(e_to) = -e_from.
void set_j_pair(Matrix& j, std::size_t from, std::size_t to) {
    j.at(to, from) = Rational(1);
    j.at(from, to) = Rational(-1);
}

SpecialKahlerAlgebra build_model(std::size_t n, std::string name) {
    const std::size_t dim = 2 * n;
    Tensor3 bracket = Tensor3::cube(dim);
    Tensor3 product = Tensor3::cube(dim);
    Matrix omega(dim, dim);
    Matrix j(dim, dim);
    for (std::size_t k = 0; k < n; ++k) {
        set_skew(omega, k, n + k, Rational(1));
        set_j_pair(j, k, n + k);
    }
    return SpecialKahlerAlgebra(LieAlgebra(dim, std::move(bracket)), std::move(omega),
                                std::move(j), std::move(product), std::move(name));
}

SpecialKahlerAlgebra build_g1() {
    Tensor3 bracket = Tensor3::cube(4);
    set_bracket(bracket, 0, 1, 1, Rational(1));
    set_bracket(bracket, 0, 2, 2, Rational(1));
    set_bracket(bracket, 0, 3, 3, Rational(-1));
    Matrix omega(4, 4);
    set_skew(omega, 2, 0, Rational(1));
    set_skew(omega, 3, 1, Rational(1));
    Matrix j(4, 4);
    set_j_pair(j, 3, 0);  // j(e4) = e1, j(e1) = -e4
    set_j_pair(j, 2, 1);  // j(e3) = e2, j(e2) = -e3
    Tensor3 product = Tensor3::cube(4);
    product.at(0, 0, 0) = Rational(-1);
    product.at(0, 1, 1) = Rational(1);
    product.at(0, 2, 2) = Rational(1);
    product.at(0, 3, 3) = Rational(-1);
    return SpecialKahlerAlgebra(LieAlgebra(4, std::move(bracket)), std::move(omega), std::move(j),
                                std::move(product), "g1_dim4");
}

SpecialKahlerAlgebra build_g2() {
    Tensor3 bracket = Tensor3::cube(6);
    set_bracket(bracket, 0, 1, 2, Rational(1));
    set_bracket(bracket, 1, 3, 4, Rational(-1));
    set_bracket(bracket, 1, 5, 3, Rational(1));
    Matrix omega(6, 6);
    set_skew(omega, 3, 0, Rational(1));
    set_skew(omega, 4, 1, Rational(1));
    set_skew(omega, 5, 2, Rational(1));
    Matrix j(6, 6);
    j.at(3, 0) = Rational(-1);
    j.at(0, 3) = Rational(1);
    j.at(5, 1) = Rational(-1);
    j.at(1, 5) = Rational(1);
    j.at(4, 2) = Rational(-1);
    j.at(2, 4) = Rational(1);
    Tensor3 product = Tensor3::cube(6);
    product.at(1, 0, 2) = Rational(-1);
    product.at(1, 1, 0) = Rational(1);
    product.at(1, 3, 4) = Rational(-1);
    product.at(1, 5, 3) = Rational(1);
    return SpecialKahlerAlgebra(LieAlgebra(6, std::move(bracket)), std::move(omega), std::move(j),
                                std::move(product), "g2_dim6");
}

Tensor3 g3_bracket() {
    Tensor3 bracket = Tensor3::cube(4);
    for (std::size_t i : {std::size_t{0}, std::size_t{2}}) {
        for (std::size_t j : {std::size_t{1}, std::size_t{3}}) {
            set_bracket(bracket, i, j, 1, Rational(1));
            set_bracket(bracket, i, j, 3, Rational(-1));
        }
    }
    return bracket;
}

Tensor3 g3_product() {
    Tensor3 product = Tensor3::cube(4);
    for (std::size_t i : {std::size_t{0}, std::size_t{2}}) {
        // rows of the odd-index pair: e_i . e_1 = e_i . e_3 = -e_1 + e_3 (0-based
        // columns 0 and 2), e_i . e_2 = e_i . e_4 = e_2 - e_4
        product.at(i, 0, 0) = Rational(-1);
        product.at(i, 0, 2) = Rational(1);
        product.at(i, 2, 0) = Rational(-1);
        product.at(i, 2, 2) = Rational(1);
        product.at(i, 1, 1) = Rational(1);
        product.at(i, 1, 3) = Rational(-1);
        product.at(i, 3, 1) = Rational(1);
        product.at(i, 3, 3) = Rational(-1);
    }
    for (std::size_t i : {std::size_t{1}, std::size_t{3}}) {
        product.at(i, 1, 0) = Rational(2);
        product.at(i, 1, 2) = Rational(-2);
        product.at(i, 3, 0) = Rational(2);
        product.at(i, 3, 2) = Rational(-2);
    }
    return product;
}

Matrix g3_omega() {
    Matrix omega(4, 4);
    set_skew(omega, 0, 1, Rational(1));
    set_skew(omega, 2, 3, Rational(-1));
    return omega;
}

Matrix g3_j() {
    Matrix j(4, 4);
    set_j_pair(j, 0, 1);
    set_j_pair(j, 2, 3);
    return j;
}

SpecialKahlerAlgebra build_g3() {
    return SpecialKahlerAlgebra(LieAlgebra(4, g3_bracket()), g3_omega(), g3_j(), g3_product(),
                                "g3_dim4");
}

SpecialKahlerAlgebra build_ga(const Rational& a) {
    // Basis order (e, e1, e2, e3, e4, d); the middle block is the dim-4 key
    // example, d acts by its derivation family, e is central.
    const std::size_t dim = 6;
    Tensor3 bracket = Tensor3::cube(dim);
    Tensor3 product = Tensor3::cube(dim);
    const Tensor3 b3 = g3_bracket();
    const Tensor3 p3 = g3_product();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                bracket.at(1 + i, 1 + j, 1 + k) = b3.at(i, j, k);
                product.at(1 + i, 1 + j, 1 + k) = p3.at(i, j, k);
            }
    const Matrix d = g3_derivation(a);
    for (std::size_t col = 0; col < 4; ++col)
        for (std::size_t row = 0; row < 4; ++row) {
            if (d.at(row, col).is_zero()) continue;
            set_bracket(bracket, 5, 1 + col, 1 + row, d.at(row, col));
            product.at(5, 1 + col, 1 + row) = d.at(row, col);
        }
    Matrix omega(dim, dim);
    set_skew(omega, 0, 5, Rational(1));
    set_skew(omega, 1, 2, Rational(1));
    set_skew(omega, 3, 4, Rational(-1));
    Matrix j(dim, dim);
    set_j_pair(j, 0, 5);
    set_j_pair(j, 1, 2);
    set_j_pair(j, 3, 4);
    std::vector<std::string> names = {"e", "e1", "e2", "e3", "e4", "d"};
    return SpecialKahlerAlgebra(LieAlgebra(dim, std::move(bracket), std::move(names)),
                                std::move(omega), std::move(j), std::move(product),
                                "ga_dim6(" + a.str() + ")");
}

SpecialKahlerAlgebra build_neg(const Tensor3& bracket, const Tensor3& product,
                               const std::string& name) {
    Matrix omega(2, 2);
    set_skew(omega, 0, 1, Rational(1));
    Matrix j(2, 2);
    set_j_pair(j, 0, 1);
    return SpecialKahlerAlgebra(LieAlgebra(2, bracket), std::move(omega), std::move(j), product,
                                name);
}

Fixture fixture_affr_lorentz() {
    Tensor3 bracket = Tensor3::cube(2);
    set_bracket(bracket, 0, 1, 1, Rational(1));
    Matrix k = {{0, 1}, {1, 0}};
    Fixture f;
    f.name = "affR_lorentz";
    f.lie = LieAlgebra(2, std::move(bracket));
    f.metric = BilinearForm(std::move(k), BilinearForm::Kind::symmetric);
    f.expected = {true, "", "(2,2)", true, false};
    f.basis_change = Matrix::identity(4);
    return f;
}

Fixture fixture_h3_lorentz() {
    Tensor3 bracket = Tensor3::cube(3);
    set_bracket(bracket, 0, 1, 2, Rational(1));
    Matrix k = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    Fixture f;
    f.name = "h3_lorentz";
    f.lie = LieAlgebra(3, std::move(bracket));
    f.metric = BilinearForm(std::move(k), BilinearForm::Kind::symmetric);
    f.expected = {true, "", "(2,4)", true, true};
    // Columns: the catalogue basis of the dim-6 example expressed in the
    // cotangent basis (E1, E2, E3, E1*, E2*, E3*).
    Matrix p(6, 6);
    p.at(1, 0) = Rational(-1);  // f1 = -E2
    p.at(0, 1) = Rational(1);   // f2 = E1
    p.at(2, 2) = Rational(1);   // f3 = E3
    p.at(4, 3) = Rational(-1);  // f4 = -E2*
    p.at(3, 4) = Rational(1);   // f5 = E1*
    p.at(5, 5) = Rational(1);   // f6 = E3*
    f.basis_change = p;
    return f;
}

struct ParsedName {
    std::string base;
    std::optional<std::string> arg;
};

ParsedName parse_name(const std::string& name) {
    const auto open = name.find('(');
    if (open == std::string::npos) return {name, std::nullopt};
    if (name.back() != ')' || open + 1 >= name.size() - 1)
        fail(errc::unknown_fixture, "malformed fixture name '" + name + "'");
    return {name.substr(0, open), name.substr(open + 1, name.size() - open - 2)};
}

std::size_t parse_count(const std::string& base, const std::optional<std::string>& arg,
                        std::size_t fallback) {
    if (!arg) return fallback;
    if (arg->empty() || arg->size() > 4 ||
        arg->find_first_not_of("0123456789") != std::string::npos)
        fail(errc::unknown_fixture, base + " takes a small non-negative integer parameter, got '" +
                                        *arg + "'");
    return static_cast<std::size_t>(std::stoul(*arg));
}

Rational parse_rational_arg(const std::string& base, const std::optional<std::string>& arg,
                            const Rational& fallback) {
    if (!arg) return fallback;
    try {
        return Rational::parse(*arg);
    } catch (const Error&) {
        fail(errc::unknown_fixture, base + " takes a rational parameter, got '" + *arg + "'");
    }
}

std::string signature_string(std::size_t p, std::size_t q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

Matrix g3_derivation(const Rational& a) {
    Matrix d(4, 4);
    d.at(0, 1) = a;
    d.at(0, 3) = a;
    d.at(1, 0) = -a;
    d.at(1, 2) = -a;
    d.at(2, 1) = -a;
    d.at(2, 3) = -a;
    d.at(3, 0) = a;
    d.at(3, 2) = a;
    return d;
}

SpecialKahlerAlgebra twisted_g3_r2n(std::size_t n, const std::vector<Rational>& t,
                                    const Rational& a) {
    if (n == 0) fail(errc::unknown_fixture, "twisted_g3_R2n needs n >= 1");
    if (t.size() != 2 * n)
        fail(errc::dimension_mismatch, "twisted_g3_R2n needs one coefficient per R^{2n} generator");
    const std::size_t dim = 4 + 2 * n;
    Tensor3 bracket = Tensor3::cube(dim);
    Tensor3 product = Tensor3::cube(dim);
    const Tensor3 b3 = g3_bracket();
    const Tensor3 p3 = g3_product();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                bracket.at(i, j, k) = b3.at(i, j, k);
                product.at(i, j, k) = p3.at(i, j, k);
            }
    const Matrix d = g3_derivation(a);
    for (std::size_t k = 0; k < 2 * n; ++k) {
        if (t[k].is_zero()) continue;
        for (std::size_t col = 0; col < 4; ++col)
            for (std::size_t row = 0; row < 4; ++row) {
                const Rational c = t[k] * d.at(row, col);
                if (c.is_zero()) continue;
                product.at(4 + k, col, row) = c;
                set_bracket(bracket, col, 4 + k, row, -c);
            }
    }
    Matrix omega(dim, dim);
    Matrix j(dim, dim);
    set_skew(omega, 0, 1, Rational(1));
    set_skew(omega, 2, 3, Rational(-1));
    set_j_pair(j, 0, 1);
    set_j_pair(j, 2, 3);
    for (std::size_t k = 0; k < n; ++k) {
        set_skew(omega, 4 + k, 4 + n + k, Rational(1));
        set_j_pair(j, 4 + k, 4 + n + k);
    }
    return SpecialKahlerAlgebra(LieAlgebra(dim, std::move(bracket)), std::move(omega),
                                std::move(j), std::move(product),
                                "twisted_g3_R2n(" + std::to_string(n) + ")");
}

std::vector<std::string> fixture_list() {
    std::vector<std::string> names = {
        "affR_lorentz", "dext_model_J0", "g1_dim4",    "g2_dim6",
        "g3_dim4",      "ga_dim6",       "h3_lorentz", "model",
        "neg_affR_1",   "neg_affR_2",    "neg_r2_connection",
        "twisted_g3_R2n",
    };
    std::sort(names.begin(), names.end());
    return names;
}

Fixture get_fixture(const std::string& name) {
    const ParsedName parsed = parse_name(name);
    const std::string& base = parsed.base;

    auto full = [&](SpecialKahlerAlgebra a, FixtureExpectation expected) {
        Fixture f;
        f.name = a.name;
        f.expected = std::move(expected);
        f.algebra = std::move(a);
        return f;
    };

    if (base == "model") {
        const std::size_t n = parse_count(base, parsed.arg, 1);
        if (n == 0) fail(errc::unknown_fixture, "model needs n >= 1");
        return full(build_model(n, "model(" + std::to_string(n) + ")"),
                    {true, "", signature_string(2 * n, 0), true, true});
    }
    if (base == "g1_dim4" && !parsed.arg) return full(build_g1(), {true, "", "(2,2)", true, false});
    if (base == "g2_dim6" && !parsed.arg) return full(build_g2(), {true, "", "(2,4)", true, true});
    if (base == "g3_dim4" && !parsed.arg) return full(build_g3(), {true, "", "(2,2)", false, true});
    if (base == "ga_dim6") {
        const Rational a = parse_rational_arg(base, parsed.arg, Rational(1));
        return full(build_ga(a), {true, "", "(4,2)", false, true});
    }
    if (base == "twisted_g3_R2n") {
        const std::size_t n = parse_count(base, parsed.arg, 1);
        if (n == 0) fail(errc::unknown_fixture, "twisted_g3_R2n needs n >= 1");
        std::vector<Rational> t(2 * n);
        t[0] = Rational(1);
        return full(twisted_g3_r2n(n, t, Rational(1)),
                    {true, "", signature_string(2, 2 * n + 2), false, true});
    }
    if (base == "dext_model_J0") {
        const std::size_t n = parse_count(base, parsed.arg, 1);
        if (n == 0) fail(errc::unknown_fixture, "dext_model_J0 needs n >= 1");
        SpecialKahlerAlgebra model = build_model(n, "model(" + std::to_string(n) + ")");
        Matrix j0 = model.j.matrix;
        return full(double_extension(model, j0, "dext_model_J0(" + std::to_string(n) + ")"),
                    {true, "", signature_string(2 * n + 2, 0), true, true});
    }
    if (base == "neg_r2_connection" && !parsed.arg) {
        Tensor3 product = Tensor3::cube(2);
        product.at(0, 0, 1) = Rational(1);
        return full(build_neg(Tensor3::cube(2), product, "neg_r2_connection"),
                    {false, "one_cocycle", "(2,0)", false, false});
    }
    if (base == "neg_affR_1" && !parsed.arg) {
        Tensor3 bracket = Tensor3::cube(2);
        set_bracket(bracket, 0, 1, 1, Rational(1));
        Tensor3 product = Tensor3::cube(2);
        product.at(0, 0, 0) = Rational(-1);
        product.at(0, 1, 1) = Rational(1);
        return full(build_neg(bracket, product, "neg_affR_1"),
                    {false, "one_cocycle", "(2,0)", false, false});
    }
    if (base == "neg_affR_2" && !parsed.arg) {
        Tensor3 bracket = Tensor3::cube(2);
        set_bracket(bracket, 0, 1, 1, Rational(1));
        Tensor3 product = Tensor3::cube(2);
        product.at(0, 0, 0) = Rational(-1, 2);
        product.at(0, 1, 1) = Rational(1, 2);
        product.at(1, 0, 1) = Rational(-1, 2);
        return full(build_neg(bracket, product, "neg_affR_2"),
                    {false, "one_cocycle", "(2,0)", false, false});
    }
    if (base == "affR_lorentz" && !parsed.arg) return fixture_affr_lorentz();
    if (base == "h3_lorentz" && !parsed.arg) return fixture_h3_lorentz();

    fail(errc::unknown_fixture, "no fixture named '" + name + "'");
}

}  // namespace sklie
