#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "conjdirac/angular.hpp"
#include "conjdirac/checks.hpp"
#include "conjdirac/cli.hpp"
#include "conjdirac/core.hpp"
#include "conjdirac/specfun.hpp"
#include "conjdirac/spectrum.hpp"
#include "conjdirac/verify.hpp"
#include "conjdirac/wavefn.hpp"

namespace py = pybind11;
using namespace conjdirac;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Array to_array(const std::vector<double>& v) {
    Array out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

RadialGrid to_grid(const Array& r) {
    if (r.ndim() != 1) {
        throw InvalidArgument("radii must be one-dimensional");
    }
    return RadialGrid(std::vector<double>(r.data(), r.data() + r.size()));
}

ProfileKind parse_kind(const std::string& name) {
    for (auto kind : {ProfileKind::phi, ProfileKind::phi_tilde, ProfileKind::psi_a, ProfileKind::psi_b}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw InvalidArgument("unknown profile kind: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bound states of the Dirac-Coulomb problem in the conjugate representation";

    auto numerical = py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<KummerConvergenceError>(m, "KummerConvergenceError", numerical.ptr());
    // InvalidArgument derives from std::invalid_argument and surfaces as ValueError.

    m.attr("ALPHA_CODATA") = kAlphaCodata;
    m.attr("ELECTRON_REST_ENERGY_EV") = kElectronRestEnergyEv;

    py::class_<PhysicsConfig>(m, "PhysicsConfig")
        .def(py::init<double, double>(), py::arg("alpha") = kAlphaCodata,
             py::arg("rest_energy_ev") = kElectronRestEnergyEv)
        .def_property_readonly("alpha", &PhysicsConfig::alpha)
        .def_property_readonly("rest_energy_ev", &PhysicsConfig::rest_energy_ev)
        .def("__repr__", [](const PhysicsConfig& c) {
            std::ostringstream os;
            os.precision(17);
            os << "PhysicsConfig(alpha=" << c.alpha() << ", rest_energy_ev=" << c.rest_energy_ev() << ")";
            return os.str();
        });

    py::class_<QuantumState>(m, "QuantumState")
        .def_readonly("n", &QuantumState::n)
        .def_readonly("kappa", &QuantumState::kappa)
        .def_readonly("n_r", &QuantumState::n_r)
        .def_readonly("l", &QuantumState::l)
        .def_readonly("gamma", &QuantumState::gamma)
        .def_property_readonly("j", [](const QuantumState& s) { return s.j.value(); })
        .def_property_readonly("m_j", [](const QuantumState& s) { return s.m_j.value(); })
        .def_property_readonly("label", &QuantumState::label)
        .def("__repr__", [](const QuantumState& s) { return "QuantumState(" + s.label() + ")"; });

    py::class_<EnergyValue>(m, "EnergyValue")
        .def_readonly("value", &EnergyValue::value)
        .def_readonly("lambda_", &EnergyValue::lambda);

    py::class_<SpectrumRow>(m, "SpectrumRow")
        .def_readonly("n", &SpectrumRow::n)
        .def_readonly("kappa", &SpectrumRow::kappa)
        .def_readonly("l", &SpectrumRow::l)
        .def_property_readonly("j", [](const SpectrumRow& r) { return r.j.value(); })
        .def_readonly("label", &SpectrumRow::label)
        .def_readonly("n_r", &SpectrumRow::n_r)
        .def_readonly("e_over_mc2", &SpectrumRow::e_over_mc2)
        .def_readonly("lambda_", &SpectrumRow::lambda)
        .def_readonly("binding_ev", &SpectrumRow::binding_ev);

    m.def("derive_gamma", &derive_gamma, py::arg("kappa"), py::arg("alpha") = kAlphaCodata);
    m.def(
        "make_state",
        [](int n, int kappa, double m_j, const PhysicsConfig& c) { return make_state(n, kappa, m_j, c); },
        py::arg("n"), py::arg("kappa"), py::arg("m_j") = 0.5, py::arg("config") = PhysicsConfig());
    m.def(
        "energy",
        [](int n, int kappa, const PhysicsConfig& c) { return energy(make_state(n, kappa, 0.5, c), c); },
        py::arg("n"), py::arg("kappa"), py::arg("config") = PhysicsConfig());
    m.def(
        "binding_energy_ev",
        [](int n, int kappa, const PhysicsConfig& c) {
            return convert_energy(energy(make_state(n, kappa, 0.5, c), c), c).binding;
        },
        py::arg("n"), py::arg("kappa"), py::arg("config") = PhysicsConfig());
    m.def("spectrum_table", &spectrum_table, py::arg("n_max"), py::arg("config") = PhysicsConfig());
    m.def("fine_structure_splitting", &fine_structure_splitting, py::arg("n"), py::arg("kappa_a"),
          py::arg("kappa_b"), py::arg("config") = PhysicsConfig());
    m.def(
        "sommerfeld_expansion",
        [](int n, double j, const PhysicsConfig& c) { return sommerfeld_expansion(n, HalfInteger::from_double(j), c); },
        py::arg("n"), py::arg("j"), py::arg("config") = PhysicsConfig());

    m.def(
        "kummer_m", [](double a, double b, double rho, double tol) { return kummer_m(a, b, rho, tol); },
        py::arg("a"), py::arg("b"), py::arg("rho"), py::arg("tol") = kKummerDefaultTol);

    m.def("spherical_harmonic", &spherical_harmonic, py::arg("l"), py::arg("m"), py::arg("theta"), py::arg("phi"));
    m.def(
        "spherical_spinor",
        [](int kappa, double m_j, double theta, double phi) {
            return spherical_spinor(kappa, HalfInteger::from_double(m_j), theta, phi);
        },
        py::arg("kappa"), py::arg("m_j"), py::arg("theta"), py::arg("phi"));

    py::class_<BoundSolution>(m, "BoundSolution")
        .def(py::init([](int n, int kappa, double m_j, const PhysicsConfig& c) {
                 return BoundSolution::make(n, kappa, HalfInteger::from_double(m_j), c);
             }),
             py::arg("n"), py::arg("kappa"), py::arg("m_j") = 0.5, py::arg("config") = PhysicsConfig())
        .def_readonly("config", &BoundSolution::config)
        .def_readonly("state", &BoundSolution::state)
        .def_readonly("energy", &BoundSolution::energy)
        .def("default_radii", [](const BoundSolution& s) {
            return to_array(RadialGrid::default_for(s.state, s.config).radii());
        })
        .def(
            "tabulate",
            [](const BoundSolution& s, const std::string& which, const Array& r, double normalization) {
                return to_array(tabulate(s, parse_kind(which), to_grid(r), normalization).values);
            },
            py::arg("which"), py::arg("r"), py::arg("normalization") = 1.0)
        .def("normalization", [](const BoundSolution& s) { return normalize(s).constant; })
        .def(
            "overlap",
            [](const BoundSolution& a, const BoundSolution& b, const Array& r) {
                return radial_overlap(a, b, to_grid(r));
            },
            py::arg("other"), py::arg("r"))
        .def(
            "round_trip_ulps", [](const BoundSolution& s, const Array& r) { return round_trip_ulps(s, to_grid(r)); },
            py::arg("r"))
        .def(
            "residuals",
            [](const BoundSolution& s, const Array& r, bool finite_difference, double edge_fraction) {
                ResidualOptions opts;
                opts.oracle.method =
                    finite_difference ? DerivativeMethod::central_difference : DerivativeMethod::analytic;
                opts.tolerance = finite_difference ? 1e-6 : 1e-8;
                opts.edge_fraction = edge_fraction;
                py::list out;
                for (const auto& rep : residual_suite(s, to_grid(r), opts)) {
                    py::dict d;
                    d["equation"] = std::string(to_string(rep.equation));
                    d["component"] = rep.component;
                    d["method"] = std::string(to_string(rep.method));
                    d["relative_norm"] = rep.relative_norm;
                    d["tolerance"] = rep.tolerance;
                    d["pass"] = rep.pass;
                    out.append(d);
                }
                return out;
            },
            py::arg("r"), py::arg("finite_difference") = false, py::arg("edge_fraction") = 0.02)
        .def("__repr__", [](const BoundSolution& s) { return "BoundSolution(" + s.state.label() + ")"; });

    py::class_<CheckRow>(m, "CheckRow")
        .def_readonly("check", &CheckRow::check)
        .def_readonly("n", &CheckRow::n)
        .def_readonly("kappa", &CheckRow::kappa)
        .def_readonly("label", &CheckRow::label)
        .def_readonly("method", &CheckRow::method)
        .def_readonly("value", &CheckRow::value)
        .def_readonly("tolerance", &CheckRow::tolerance)
        .def_readonly("passed", &CheckRow::pass);

    m.def(
        "run_verification",
        [](int n_max, const PhysicsConfig& c, double tolerance, double fd_tolerance) {
            VerifyOptions opts;
            opts.tolerance = tolerance;
            opts.fd_tolerance = fd_tolerance;
            return run_verification(n_max, c, opts);
        },
        py::arg("n_max") = 4, py::arg("config") = PhysicsConfig(), py::arg("tolerance") = 1e-8,
        py::arg("fd_tolerance") = 1e-6);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
