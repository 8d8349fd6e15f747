// Python bindings for the structure-tensor toolkit. The boundary speaks
// strings for rationals (exact, no float round-trip) and nested lists for
// matrices; heavy objects stay opaque handles on the C++ side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sklie/constructions.hpp"
#include "sklie/fixtures.hpp"
#include "sklie/io.hpp"
#include "sklie/representations.hpp"
#include "sklie/special_kahler.hpp"

namespace py = pybind11;
using namespace sklie;

namespace {

using PyMatrix = std::vector<std::vector<std::string>>;
using PyVec = std::vector<std::string>;

Rational to_rational(const std::string& s) { return Rational::parse(s); }

Matrix to_matrix(const PyMatrix& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            fail(errc::dimension_mismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = to_rational(rows[i][j]);
    }
    return m;
}

PyMatrix from_matrix(const Matrix& m) {
    PyMatrix rows(m.rows(), PyVec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).str();
    return rows;
}

Vec to_vec(const PyVec& v) {
    Vec out(v.size(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_rational(v[i]);
    return out;
}

py::dict report_to_dict(const VerificationReport& report) {
    py::dict d;
    d["certified"] = report.certified;
    py::list items;
    for (const VerificationItem& item : report.items) {
        py::dict e;
        e["axiom"] = item.axiom;
        e["passed"] = item.passed;
        e["witness"] = item.witness;
        e["detail"] = item.detail;
        items.append(e);
    }
    d["items"] = items;
    return d;
}

RepresentationPair to_reps(const std::vector<PyMatrix>& theta,
                           const std::vector<PyMatrix>& rho) {
    RepresentationPair r;
    for (const PyMatrix& m : theta) r.theta.push_back(to_matrix(m));
    for (const PyMatrix& m : rho) r.rho.push_back(to_matrix(m));
    return r;
}

}  // namespace

PYBIND11_MODULE(sklie, m) {
    m.doc() = "Exact structure tensors: verification and constructions over Q";

    py::register_exception<Error>(m, "Error");

    py::class_<SpecialKahlerAlgebra>(m, "Algebra")
        .def_property_readonly("name", [](const SpecialKahlerAlgebra& a) { return a.name; })
        .def_property_readonly("dim", &SpecialKahlerAlgebra::dim)
        .def("verify",
             [](const SpecialKahlerAlgebra& a) { return report_to_dict(a.verify()); })
        .def("certified", &SpecialKahlerAlgebra::certified)
        .def("signature",
             [](const SpecialKahlerAlgebra& a) {
                 const Signature s = a.metric_signature();
                 return py::make_tuple(s.positive, s.negative);
             })
        .def("is_flat_special", &SpecialKahlerAlgebra::is_flat_special)
        .def("is_geodesically_complete", &SpecialKahlerAlgebra::is_geodesically_complete)
        .def("omega", [](const SpecialKahlerAlgebra& a) { return from_matrix(a.omega.matrix); })
        .def("j", [](const SpecialKahlerAlgebra& a) { return from_matrix(a.j.matrix); })
        .def("metric",
             [](const SpecialKahlerAlgebra& a) { return from_matrix(a.metric().matrix); })
        .def("serialize", [](const SpecialKahlerAlgebra& a) { return serialize(a); })
        .def("__repr__", [](const SpecialKahlerAlgebra& a) {
            return "<Algebra '" + a.name + "' dim " + std::to_string(a.dim()) + ">";
        });

    m.def("fixture_list", &fixture_list, "Registered fixture base names, sorted.");
    m.def(
        "fixture",
        [](const std::string& name) {
            const Fixture f = get_fixture(name);
            if (!f.algebra)
                fail(errc::unknown_fixture, "'" + name + "' is a metric Lie algebra input, "
                                            "not a full structure");
            return *f.algebra;
        },
        py::arg("name"), "Full-structure fixture by name, e.g. 'g3_dim4' or 'model(2)'.");
    m.def(
        "parse", [](const std::string& text) { return parse_input(text).to_algebra(); },
        py::arg("text"), "Parse the JSON input format into an Algebra.");

    m.def(
        "cotangent",
        [](const std::string& fixture_name) {
            const Fixture f = get_fixture(fixture_name);
            if (!f.lie || !f.metric)
                fail(errc::unknown_fixture,
                     "'" + fixture_name + "' does not carry a metric Lie algebra");
            return cotangent_hess(*f.lie, *f.metric, "cotangent(" + f.name + ")");
        },
        py::arg("fixture_name"),
        "Cotangent construction applied to a metric Lie algebra fixture.");

    m.def(
        "twisted_product",
        [](const SpecialKahlerAlgebra& a1, const SpecialKahlerAlgebra& a2,
           const std::vector<PyMatrix>& theta, const std::vector<PyMatrix>& rho) {
            return twisted_product(a1, a2, to_reps(theta, rho));
        },
        py::arg("first"), py::arg("second"), py::arg("theta"), py::arg("rho"));

    m.def(
        "double_extension",
        [](const SpecialKahlerAlgebra& base, const PyMatrix& derivation) {
            return double_extension(base, to_matrix(derivation));
        },
        py::arg("base"), py::arg("derivation"));

    m.def(
        "reduce_by_line",
        [](const SpecialKahlerAlgebra& a, const PyVec& line) {
            const ReductionResult r = reduce_by_line(a, to_vec(line));
            return py::make_tuple(r.reduced, from_matrix(r.derivation),
                                  from_matrix(r.adapted_basis));
        },
        py::arg("algebra"), py::arg("line"),
        "Returns (reduced, derivation, adapted_basis).");

    m.def(
        "split_by_ideal",
        [](const SpecialKahlerAlgebra& a, const std::vector<PyVec>& generators) {
            std::vector<Vec> gens;
            for (const PyVec& g : generators) gens.push_back(to_vec(g));
            const SplitResult r = split_by_ideal(a, Subspace::span(a.dim(), gens));
            std::vector<PyMatrix> theta, rho;
            for (const Matrix& t : r.reps.theta) theta.push_back(from_matrix(t));
            for (const Matrix& t : r.reps.rho) rho.push_back(from_matrix(t));
            return py::make_tuple(r.factor1, r.factor2, theta, rho,
                                  from_matrix(r.adapted_basis));
        },
        py::arg("algebra"), py::arg("generators"),
        "Returns (factor1, factor2, theta, rho, adapted_basis).");

    m.def(
        "derivation_space",
        [](const SpecialKahlerAlgebra& a) {
            std::vector<PyMatrix> out;
            for (const Matrix& d : derivation_space(a)) out.push_back(from_matrix(d));
            return out;
        },
        py::arg("algebra"),
        "Basis of the admissible derivations (symplectic, j-commuting, Leibniz).");

    m.def(
        "sp_commutant_space",
        [](const SpecialKahlerAlgebra& a) {
            std::vector<PyMatrix> out;
            for (const Matrix& d : sp_commutant_space(a)) out.push_back(from_matrix(d));
            return out;
        },
        py::arg("algebra"));

    m.def(
        "change_basis",
        [](const SpecialKahlerAlgebra& a, const PyMatrix& p) {
            return change_basis(a, to_matrix(p));
        },
        py::arg("algebra"), py::arg("p"));

    m.def("same_structure", &same_structure, py::arg("x"), py::arg("y"),
          "Component-wise equality of the four structure tensors.");
}
