#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "jacross/asymptotics.hpp"
#include "jacross/exact.hpp"
#include "jacross/gamma.hpp"
#include "jacross/jacobi.hpp"
#include "jacross/quadrature.hpp"
#include "jacross/spaces.hpp"
#include "jacross/summation.hpp"

namespace py = pybind11;
using namespace jacross;

namespace {

std::vector<std::pair<long long, long long>> rodrigues_pairs(const JacobiParams& params,
                                                             std::int64_t ell) {
    const ExactPolynomial poly = rodrigues_exact(params, ell);
    std::vector<std::pair<long long, long long>> out;
    out.reserve(poly.coefficients().size());
    for (const Rational& c : poly.coefficients()) {
        out.emplace_back(c.numerator(), c.denominator());
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_jacross, m) {
    m.doc() = "Jacobi polynomials and spectral sums on compact rank-one symmetric spaces";

    py::class_<JacobiParams>(m, "JacobiParams")
        .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
        .def_property_readonly("alpha", &JacobiParams::alpha)
        .def_property_readonly("beta", &JacobiParams::beta)
        .def("__repr__", [](const JacobiParams& p) {
            return "JacobiParams(alpha=" + std::to_string(p.alpha()) +
                   ", beta=" + std::to_string(p.beta()) + ")";
        });

    m.def("log_gamma", &log_gamma, py::arg("x"));
    m.def("log_beta", &log_beta, py::arg("a"), py::arg("b"));

    m.def("jacobi_eval", &jacobi_eval, py::arg("params"), py::arg("ell"), py::arg("x"));
    m.def("jacobi_eval_all", &jacobi_eval_all, py::arg("params"), py::arg("m"), py::arg("x"));
    m.def("orthonormal_eval_all", &orthonormal_eval_all, py::arg("params"), py::arg("m"),
          py::arg("x"));
    m.def("jacobi_norm_sq", &jacobi_norm_sq, py::arg("params"), py::arg("ell"));
    m.def("jacobi_deriv", &jacobi_deriv, py::arg("params"), py::arg("ell"), py::arg("x"));
    m.def("ode_residual", &ode_residual, py::arg("params"), py::arg("ell"), py::arg("x"));
    m.def("weight_mass", &weight_mass, py::arg("params"));
    m.def("rodrigues_coefficients", &rodrigues_pairs, py::arg("params"), py::arg("ell"),
          "Exact rational coefficients of P_ell, lowest power first, as (num, den) pairs");

    py::class_<SymmetricSpace>(m, "SymmetricSpace")
        .def_static("sphere", &SymmetricSpace::sphere, py::arg("n"))
        .def_static("complex_projective", &SymmetricSpace::complex_projective, py::arg("n"))
        .def_static("quaternionic_projective", &SymmetricSpace::quaternionic_projective,
                    py::arg("n"))
        .def_static("cayley_plane", &SymmetricSpace::cayley_plane)
        .def_property_readonly("n", &SymmetricSpace::n)
        .def_property_readonly("is_sphere", &SymmetricSpace::is_sphere)
        .def("name", &SymmetricSpace::name)
        .def("__repr__", [](const SymmetricSpace& s) { return "SymmetricSpace(" + s.name() + ")"; });

    m.def("parse_space", &parse_space, py::arg("name"));

    py::class_<SpaceParams>(m, "SpaceParams")
        .def_readonly("space", &SpaceParams::space)
        .def_readonly("dim", &SpaceParams::dim)
        .def_readonly("p", &SpaceParams::p)
        .def_readonly("q", &SpaceParams::q)
        .def_readonly("diameter", &SpaceParams::diameter)
        .def_readonly("omega", &SpaceParams::omega)
        .def_readonly("jacobi", &SpaceParams::jacobi)
        .def_property_readonly("cut_codim",
                               [](const SpaceParams& sp) -> py::object {
                                   if (!sp.cut_locus) return py::none();
                                   return py::int_(sp.cut_locus->codim);
                               })
        .def_property_readonly("cut_measure", [](const SpaceParams& sp) -> py::object {
            if (!sp.cut_locus) return py::none();
            return py::float_(sp.cut_locus->measure);
        });

    m.def("space_params", &space_params, py::arg("space"));
    m.def("area", &area, py::arg("space"), py::arg("r"));
    m.def("volume", &volume, py::arg("space"));
    m.def("eigenvalue", &eigenvalue, py::arg("space"), py::arg("ell"));
    m.def("max_degree_below", &max_degree_below, py::arg("space"), py::arg("threshold"));
    m.def("normalizing_constant", &normalizing_constant, py::arg("space"), py::arg("ell"));
    m.def("radial_eigenfunction", &radial_eigenfunction, py::arg("space"), py::arg("ell"),
          py::arg("r"));
    m.def("pushforward_density", &pushforward_density, py::arg("space"), py::arg("x"));
    m.def("pushforward_prefactor", &pushforward_prefactor, py::arg("space"));

    py::class_<QuadratureRule>(m, "QuadratureRule")
        .def_readonly("params", &QuadratureRule::params)
        .def_readonly("n", &QuadratureRule::n)
        .def_readonly("nodes", &QuadratureRule::nodes)
        .def_readonly("weights", &QuadratureRule::weights);

    m.def("gauss_jacobi", &gauss_jacobi, py::arg("params"), py::arg("n"));
    m.def("integrate", &integrate, py::arg("rule"), py::arg("f"));

    py::class_<ConvergenceEntry>(m, "ConvergenceEntry")
        .def_readonly("m", &ConvergenceEntry::m)
        .def_readonly("lhs", &ConvergenceEntry::lhs)
        .def_readonly("target", &ConvergenceEntry::target)
        .def_readonly("rel_err", &ConvergenceEntry::rel_err);

    py::class_<ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("entries", &ConvergenceReport::entries)
        .def_readonly("fitted_rate", &ConvergenceReport::fitted_rate)
        .def_readonly("tolerance", &ConvergenceReport::tolerance)
        .def_readonly("passed", &ConvergenceReport::passed);

    py::class_<SumTarget>(m, "SumTarget")
        .def_static("distance_sphere", &SumTarget::distance_sphere, py::arg("radius"))
        .def_static("cut_locus", &SumTarget::cut_locus);

    py::class_<KuznecovResult>(m, "KuznecovResult")
        .def_readonly("empirical", &KuznecovResult::empirical)
        .def_readonly("predicted", &KuznecovResult::predicted);

    m.def("identity_lhs", &identity_lhs, py::arg("params"), py::arg("m"), py::arg("x"));
    m.def("identity_rhs", &identity_rhs, py::arg("params"), py::arg("x"));
    m.def(
        "verify_identity",
        [](const JacobiParams& params, double x, const std::vector<std::int64_t>& schedule,
           double tol) { return verify_identity(params, x, schedule, tol); },
        py::arg("params"), py::arg("x"), py::arg("schedule"), py::arg("tol"));
    m.def("cutlocus_sum", &cutlocus_sum, py::arg("space"), py::arg("m"));
    m.def(
        "verify_cutlocus",
        [](const SymmetricSpace& space, const std::vector<std::int64_t>& schedule, double tol) {
            return verify_cutlocus(space, schedule, tol);
        },
        py::arg("space"), py::arg("schedule"), py::arg("tol"));
    m.def("kuznecov_sum", &kuznecov_sum, py::arg("space"), py::arg("target"), py::arg("T"));
    m.def("fit_rate", &fit_rate, py::arg("report"));
}
