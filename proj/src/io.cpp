#include "sklie/io.hpp"

#include <json.hpp>

#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "sklie/error.hpp"
#include "sklie/linalg.hpp"

namespace sklie {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational rational_from(const ordered_json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const Error& e) {
            fail(errc::parse_error, where + ": " + e.what());
        }
    }
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    fail(errc::parse_error, where + ": expected a rational string, got " + v.dump());
}

Matrix matrix_from(const ordered_json& v, std::size_t dim, const std::string& where) {
    if (!v.is_array() || v.size() != dim)
        fail(errc::parse_error, where + ": expected " + std::to_string(dim) + " rows");
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const ordered_json& row = v[r];
        if (!row.is_array() || row.size() != dim)
            fail(errc::parse_error,
                 where + " row " + std::to_string(r + 1) + ": expected " + std::to_string(dim) +
                     " entries");
        for (std::size_t c = 0; c < dim; ++c)
            m.at(r, c) = rational_from(row[c], where + "[" + std::to_string(r + 1) + "][" +
                                                   std::to_string(c + 1) + "]");
    }
    return m;
}

std::size_t index_from(const ordered_json& v, std::size_t dim, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 1 ||
        v.get<long long>() > static_cast<long long>(dim))
        fail(errc::parse_error, where + ": expected a basis index in 1.." + std::to_string(dim));
    return static_cast<std::size_t>(v.get<long long>()) - 1;
}

/// Sparse pair list {"i","j","coeffs":{"k": rational}} -> tensor entries.
/// With antisymmetric=true requires i<j and writes the closure.
Tensor3 tensor_from(const ordered_json& v, std::size_t dim, bool antisymmetric,
                    const std::string& where) {
    Tensor3 t = Tensor3::cube(dim);
    if (!v.is_array()) fail(errc::parse_error, where + ": expected a list of pair entries");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < v.size(); ++e) {
        const std::string at = where + " entry " + std::to_string(e + 1);
        const ordered_json& entry = v[e];
        if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
            !entry.contains("coeffs"))
            fail(errc::parse_error, at + ": expected an object with i, j, coeffs");
        const std::size_t i = index_from(entry["i"], dim, at + " i");
        const std::size_t j = index_from(entry["j"], dim, at + " j");
        if (antisymmetric && i >= j)
            fail(errc::parse_error, at + ": bracket pairs must have i < j");
        if (!seen.insert({i, j}).second)
            fail(errc::parse_error, at + ": duplicate pair (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ")");
        const ordered_json& coeffs = entry["coeffs"];
        if (!coeffs.is_object()) fail(errc::parse_error, at + ": coeffs must be an object");
        for (const auto& [key, value] : coeffs.items()) {
            std::size_t k = 0;
            if (key.empty() || key.size() > 9 ||
                key.find_first_not_of("0123456789") != std::string::npos ||
                (k = std::stoul(key)) < 1 || k > dim)
                fail(errc::parse_error,
                     at + ": coefficient key '" + key + "' is not a basis index in 1.." +
                         std::to_string(dim));
            const Rational c = rational_from(value, at + " coeffs[" + key + "]");
            t.at(i, j, k - 1) = c;
            if (antisymmetric) t.at(j, i, k - 1) = -c;
        }
    }
    return t;
}

ordered_json rational_to(const Rational& r) { return ordered_json(r.str()); }

ordered_json matrix_to(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json tensor_to(const Tensor3& t, bool antisymmetric) {
    ordered_json entries = ordered_json::array();
    const std::size_t n = t.n1();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = antisymmetric ? i + 1 : 0; j < n; ++j) {
            ordered_json coeffs = ordered_json::object();
            for (std::size_t k = 0; k < n; ++k) {
                if (t.at(i, j, k).is_zero()) continue;
                coeffs[std::to_string(k + 1)] = rational_to(t.at(i, j, k));
            }
            if (coeffs.empty()) continue;
            ordered_json entry = ordered_json::object();
            entry["i"] = i + 1;
            entry["j"] = j + 1;
            entry["coeffs"] = std::move(coeffs);
            entries.push_back(std::move(entry));
        }
    }
    return entries;
}

ordered_json parse_document(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

SpecialKahlerAlgebra ParsedInput::to_algebra() const {
    if (!omega || !j || !product)
        fail(errc::parse_error,
             "'" + name + "' is not a full bundle: omega, j and product are all required");
    return SpecialKahlerAlgebra(lie, *omega, *j, *product, name);
}

ParsedInput parse_input(const std::string& text) {
    const ordered_json doc = parse_document(text);
    if (!doc.is_object()) fail(errc::parse_error, "top level must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
        fail(errc::parse_error, "missing or invalid 'dim'");
    const std::size_t dim = doc["dim"].get<std::size_t>();

    ParsedInput in;
    in.name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>()
                                                              : std::string{};

    std::vector<std::string> basis;
    if (doc.contains("basis")) {
        const ordered_json& b = doc["basis"];
        if (!b.is_array() || b.size() != dim)
            fail(errc::parse_error, "'basis' must list exactly dim labels");
        for (const auto& label : b) {
            if (!label.is_string()) fail(errc::parse_error, "'basis' labels must be strings");
            basis.push_back(label.get<std::string>());
        }
    }

    Tensor3 bracket = doc.contains("brackets")
                          ? tensor_from(doc["brackets"], dim, true, "brackets")
                          : Tensor3::cube(dim);
    in.lie = LieAlgebra(dim, std::move(bracket), std::move(basis));

    const bool has_omega = doc.contains("omega");
    const bool has_j = doc.contains("j");
    const bool has_product = doc.contains("product");
    const bool has_metric = doc.contains("metric");
    if (has_omega || has_j || has_product) {
        if (!(has_omega && has_j && has_product))
            fail(errc::parse_error, "a full bundle needs omega, j and product together");
        if (has_metric)
            fail(errc::parse_error, "'metric' belongs to metric Lie algebra files only");
        in.omega = matrix_from(doc["omega"], dim, "omega");
        in.j = matrix_from(doc["j"], dim, "j");
        in.product = tensor_from(doc["product"], dim, false, "product");
    } else if (has_metric) {
        in.metric = matrix_from(doc["metric"], dim, "metric");
    }
    return in;
}

std::string serialize(const SpecialKahlerAlgebra& a) {
    ordered_json doc;
    doc["name"] = a.name;
    doc["dim"] = a.dim();
    ordered_json basis = ordered_json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.lie.name_of(i));
    doc["basis"] = std::move(basis);
    doc["brackets"] = tensor_to(a.lie.bracket, true);
    doc["omega"] = matrix_to(a.omega.matrix);
    doc["j"] = matrix_to(a.j.matrix);
    doc["product"] = tensor_to(a.product.tensor, false);
    return dump(doc);
}

std::string serialize_metric_lie(const LieAlgebra& g, const BilinearForm& k,
                                 const std::string& name) {
    ordered_json doc;
    doc["name"] = name;
    doc["dim"] = g.dim;
    ordered_json basis = ordered_json::array();
    for (std::size_t i = 0; i < g.dim; ++i) basis.push_back(g.name_of(i));
    doc["basis"] = std::move(basis);
    doc["brackets"] = tensor_to(g.bracket, true);
    doc["metric"] = matrix_to(k.matrix);
    return dump(doc);
}

Matrix parse_matrix_file(const std::string& text) {
    const ordered_json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer() ||
        doc["dim"].get<long long>() < 0 || !doc.contains("matrix"))
        fail(errc::parse_error, "matrix files need 'dim' and 'matrix'");
    return matrix_from(doc["matrix"], doc["dim"].get<std::size_t>(), "matrix");
}

std::string serialize_matrix_file(const Matrix& m, const std::string& name) {
    if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "matrix files hold square matrices");
    ordered_json doc;
    doc["name"] = name;
    doc["dim"] = m.rows();
    doc["matrix"] = matrix_to(m);
    return dump(doc);
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_of(const std::string& canonical_text) {
    static const char* hex = "0123456789abcdef";
    const std::uint64_t h = fnv1a64(canonical_text);
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xF];
    return out;
}

RepresentationPair parse_reps_file(const std::string& text, std::size_t dim1, std::size_t dim2) {
    const ordered_json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("theta") || !doc.contains("rho"))
        fail(errc::parse_error, "twist-action files need 'theta' and 'rho' lists");
    auto matrices = [](const ordered_json& list, std::size_t count, std::size_t dim,
                       const std::string& where) {
        if (!list.is_array() || list.size() != count)
            fail(errc::parse_error,
                 where + ": expected " + std::to_string(count) + " matrices");
        std::vector<Matrix> out;
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(matrix_from(list[i], dim, where + "[" + std::to_string(i + 1) + "]"));
        return out;
    };
    RepresentationPair r;
    r.theta = matrices(doc["theta"], dim1, dim2, "theta");
    r.rho = matrices(doc["rho"], dim2, dim1, "rho");
    return r;
}

std::string serialize_reps_file(const RepresentationPair& r, const std::string& name) {
    ordered_json doc;
    doc["name"] = name;
    ordered_json theta = ordered_json::array();
    for (const Matrix& m : r.theta) theta.push_back(matrix_to(m));
    doc["theta"] = std::move(theta);
    ordered_json rho = ordered_json::array();
    for (const Matrix& m : r.rho) rho.push_back(matrix_to(m));
    doc["rho"] = std::move(rho);
    return dump(doc);
}

std::string render_report(const SpecialKahlerAlgebra& a, const std::string& input_name,
                          const std::string& input_digest, bool structured,
                          const std::vector<std::pair<std::string, std::string>>& outputs) {
    const VerificationReport& rep = a.verify();
    const bool certified = rep.certified;

    std::string signature;
    bool flat_special = false;
    bool unimodular = false;
    if (certified) {
        const Signature s = a.metric_signature();
        signature = "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
        flat_special = a.is_flat_special();
        unimodular = a.is_geodesically_complete();
    }

    if (structured) {
        ordered_json doc;
        doc["tool"] = "sklie 1.0.0";
        doc["input"] = {{"name", input_name}, {"digest", input_digest}};
        doc["subject"] = a.name;
        doc["certified"] = certified;
        ordered_json items = ordered_json::array();
        for (const VerificationItem& item : rep.items) {
            ordered_json entry;
            entry["axiom"] = item.axiom;
            entry["passed"] = item.passed;
            if (!item.passed) {
                ordered_json witness = ordered_json::array();
                for (const std::size_t w : item.witness) witness.push_back(w + 1);
                entry["witness"] = std::move(witness);
                entry["detail"] = item.detail;
            }
            items.push_back(std::move(entry));
        }
        doc["items"] = std::move(items);
        if (certified)
            doc["derived"] = {{"signature", signature},
                              {"flat_special", flat_special},
                              {"unimodular", unimodular}};
        if (!outputs.empty()) {
            ordered_json embedded = ordered_json::array();
            for (const auto& [label, text] : outputs)
                embedded.push_back({{"label", label}, {"file", parse_document(text)}});
            doc["outputs"] = std::move(embedded);
        }
        return dump(doc);
    }

    std::ostringstream os;
    os << "sklie 1.0.0\n";
    os << "input: " << input_name << "\n";
    os << "digest: " << input_digest << "\n";
    os << "subject: " << a.name << "\n";
    os << "axioms:\n";
    for (const VerificationItem& item : rep.items) {
        os << "  [" << (item.passed ? "pass" : "FAIL") << "] " << item.axiom;
        if (!item.passed) {
            if (!item.witness.empty()) {
                os << "  (witness ";
                for (std::size_t w = 0; w < item.witness.size(); ++w)
                    os << (w ? "," : "") << item.witness[w] + 1;
                os << ")";
            }
            os << " " << item.detail;
        }
        os << "\n";
    }
    os << "certified: " << (certified ? "yes" : "no") << "\n";
    if (certified) {
        os << "signature: " << signature << "\n";
        os << "flat_special: " << (flat_special ? "yes" : "no") << "\n";
        os << "unimodular: " << (unimodular ? "yes" : "no") << "\n";
    }
    for (const auto& [label, text] : outputs) {
        os << "--- output: " << label << " ---\n";
        os << text;
    }
    return os.str();
}

}  // namespace sklie
