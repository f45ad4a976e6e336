#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lcskit/dga.hpp"
#include "lcskit/hodge.hpp"
#include "lcskit/kerr.hpp"
#include "lcskit/lcs.hpp"
#include "lcskit/parse.hpp"

namespace py = pybind11;
using namespace lcskit;

namespace {

Rational rational_from_string(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

std::string rational_str(const Rational& q) { return rat_to_string(q); }

py::dict report_to_dict(const VerificationReport& r) {
    py::dict d;
    d["subject"] = r.subject;
    py::list checks;
    for (const auto& c : r.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["status"] = status_name(c.status);
        cd["witness"] = c.witness;
        checks.append(cd);
    }
    d["checks"] = checks;
    d["ok"] = r.all_passed();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact exterior calculus for lcs structures, Hodge-Lefschetz "
              "operators, dga cohomology, and the Kerr quartic pencil";

    py::register_exception<Error>(m, "LcskitError");

    py::class_<Chart>(m, "Chart")
        .def_static("parse", [](const std::string& text) { return parse_chart(text); })
        .def_static("cartesian", &Chart::cartesian)
        .def_property_readonly("dimension", &Chart::dimension)
        .def("__eq__", [](const Chart& a, const Chart& b) { return a == b; })
        .def("__repr__", [](const Chart& c) { return chart_to_string(c); });

    py::class_<ScalarExpr>(m, "ScalarExpr")
        .def("__add__", [](const ScalarExpr& a, const ScalarExpr& b) { return a + b; })
        .def("__sub__", [](const ScalarExpr& a, const ScalarExpr& b) { return a - b; })
        .def("__mul__", [](const ScalarExpr& a, const ScalarExpr& b) { return a * b; })
        .def("__truediv__", [](const ScalarExpr& a, const ScalarExpr& b) { return a / b; })
        .def("__neg__", [](const ScalarExpr& a) { return -a; })
        .def("__eq__", [](const ScalarExpr& a, const ScalarExpr& b) { return a == b; })
        .def("differentiate", &ScalarExpr::differentiate)
        .def("is_zero", &ScalarExpr::is_zero)
        .def("__repr__", &ScalarExpr::to_string);

    py::class_<DifferentialForm>(m, "DifferentialForm")
        .def("__add__",
             [](const DifferentialForm& a, const DifferentialForm& b) { return a + b; })
        .def("__sub__",
             [](const DifferentialForm& a, const DifferentialForm& b) { return a - b; })
        .def("__neg__", [](const DifferentialForm& a) { return -a; })
        .def("__xor__",
             [](const DifferentialForm& a, const DifferentialForm& b) { return wedge(a, b); })
        .def("__mul__", [](const DifferentialForm& a, const ScalarExpr& s) { return a * s; })
        .def("__eq__",
             [](const DifferentialForm& a, const DifferentialForm& b) { return a == b; })
        .def("wedge",
             [](const DifferentialForm& a, const DifferentialForm& b) { return wedge(a, b); })
        .def("d", [](const DifferentialForm& a) { return exterior_derivative(a); })
        .def("degree", [](const DifferentialForm& a) { return a.degree(); })
        .def("is_zero", &DifferentialForm::is_zero)
        .def("__repr__", &DifferentialForm::to_string);

    m.def("parse_scalar", &parse_scalar, py::arg("chart"), py::arg("text"));
    m.def("parse_form", &parse_form, py::arg("chart"), py::arg("text"));
    m.def("contract_bivector", &contract_bivector);

    py::class_<LcsStructure>(m, "LcsStructure")
        .def(py::init<Chart, DifferentialForm, DifferentialForm>())
        .def_readonly("chart", &LcsStructure::chart)
        .def_readonly("omega", &LcsStructure::omega)
        .def_readonly("theta", &LcsStructure::theta)
        .def_property_readonly("lee_sign",
                               [](const LcsStructure& s) { return s.lee_sign; });

    py::class_<ContactForm>(m, "ContactForm")
        .def(py::init<Chart, DifferentialForm>())
        .def_readonly("chart", &ContactForm::chart)
        .def_readonly("alpha", &ContactForm::alpha);

    m.def("verify_lcs",
          [](LcsStructure& s) { return report_to_dict(verify_lcs(s)); });
    m.def("verify_contact",
          [](const ContactForm& c) { return report_to_dict(verify_contact(c)); });
    m.def("build_collar", &build_collar, py::arg("contact"), py::arg("t_name") = "t");
    m.def("restrict_to_boundary", &restrict_to_boundary);

    py::class_<HLContext>(m, "HLContext")
        .def(py::init<LcsStructure>())
        .def("star", &HLContext::star)
        .def("lefschetz_L", &HLContext::lefschetz_L)
        .def("lefschetz_Lstar", &HLContext::lefschetz_Lstar)
        .def("symplectic_delta", &HLContext::symplectic_delta)
        .def("commutator_spectrum", [](const HLContext& ctx) {
            py::list out;
            for (const auto& e : ctx.commutator_spectrum()) {
                py::dict d;
                d["degree"] = e.degree;
                d["scalar"] = e.scalar;
                d["value"] = e.value.to_string();
                out.append(d);
            }
            return out;
        });

    m.def("lichnerowicz_d", [](const LcsStructure& s, const DifferentialForm& f, int weight) {
        return lichnerowicz_d(s, {f, weight}).form;
    });
    m.def("scan_relations", [](const HLContext& ctx, int trials, std::uint64_t seed) {
        RelationReport r = scan_relations(ctx, trials, seed);
        py::dict d;
        d["trials"] = r.trials;
        d["seed"] = r.seed;
        d["theta_zero"] = r.theta_zero;
        d["vanishing_offsets"] = r.vanishing_offsets;
        return d;
    });

    m.def("betti", [](const std::string& presentation, int max_degree) {
        PresentedCDGA a = PresentedCDGA::parse(presentation);
        BettiTable t = betti(a, max_degree);
        py::dict d;
        d["max_degree"] = t.max_degree;
        d["dims"] = t.dims;
        d["betti"] = t.ranks;
        return d;
    });
    m.def("betti_twisted",
          [](const std::string& presentation, std::size_t lee, int weight, int max_degree) {
              PresentedCDGA a = PresentedCDGA::parse(presentation);
              BettiTable t = betti_twisted(a, lee, weight, max_degree);
              py::dict d;
              d["max_degree"] = t.max_degree;
              d["dims"] = t.dims;
              d["betti"] = t.ranks;
              return d;
          });

    m.def("quartic_eval", [](const std::string& r, const std::string& x,
                             const std::string& z, const std::string& a) {
        return rational_str(quartic_eval(ProjectivePoint::make(
            rational_from_string(r), rational_from_string(x), rational_from_string(z),
            rational_from_string(a))));
    });
    m.def("fiber", [](const std::string& theta_p) {
        ConicReport r = fiber(rational_from_string(theta_p));
        py::dict d;
        d["type"] = r.type == ConicType::ellipse     ? "ellipse"
                    : r.type == ConicType::line_pair ? "line_pair"
                                                     : "point";
        d["ecc2"] = rational_str(r.ecc2);
        d["semi_axis_kappa2"] = rational_str(r.semi_axis_kappa2);
        d["semi_axis_rho2"] = rational_str(r.semi_axis_rho2);
        return d;
    });
    m.def("fiber_membership", [](const std::string& theta_p, const std::string& kappa,
                                 const std::string& rho) {
        return fiber_membership(rational_from_string(theta_p), rational_from_string(kappa),
                                rational_from_string(rho));
    });
    m.def("verify_ks_identity", [] {
        IdentityReport r = verify_ks_identity();
        py::dict d;
        d["computed"] = r.computed;
        d["printed"] = r.printed;
        d["difference"] = r.difference;
        d["matches"] = r.matches;
        return d;
    });
    m.def("kerr_two_form", [] {
        FormReport r = kerr_two_form();
        py::dict d;
        d["computed"] = r.computed;
        d["printed"] = r.printed;
        d["difference"] = r.difference;
        d["closed"] = r.closed;
        d["degeneracy_locus"] = r.degeneracy_locus;
        d["matches"] = r.matches;
        return d;
    });
    m.def("sample_pencil",
          [](const std::string& a, int count, std::uint64_t seed) {
              py::list out;
              for (const auto& row : sample_pencil(rational_from_string(a), count, seed)) {
                  py::dict d;
                  d["index"] = row.index;
                  d["theta_p"] = rational_str(row.theta_p);
                  d["ecc2"] = rational_str(row.ecc2);
                  d["kappa"] = rational_str(row.kappa);
                  d["rho"] = rational_str(row.rho);
                  out.append(d);
              }
              return out;
          });
    m.def("sample_pencil_csv", [](const std::string& a, int count, std::uint64_t seed) {
        std::ostringstream csv;
        write_pencil_csv(csv, sample_pencil(rational_from_string(a), count, seed));
        return csv.str();
    });
}
