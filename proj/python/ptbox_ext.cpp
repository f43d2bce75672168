#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ptbox/berry.hpp"
#include "ptbox/coupling.hpp"
#include "ptbox/errors.hpp"
#include "ptbox/manifest.hpp"
#include "ptbox/observables.hpp"
#include "ptbox/static_spectrum.hpp"

namespace py = pybind11;
using namespace ptbox;

namespace {

// Samples as a (T, N) complex array plus one float array per observable column.
template <class Record>
py::dict pack(const Record& record, const ObservableSeries& series)
{
    const auto T = static_cast<py::ssize_t>(record.samples.size());
    const auto N = T > 0 ? static_cast<py::ssize_t>(record.samples.front().c.size()) : 0;

    py::array_t<std::complex<double>> coefficients({T, N});
    auto c = coefficients.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < T; ++i)
        for (py::ssize_t k = 0; k < N; ++k) c(i, k) = record.samples[i].c(k);

    auto column = [&](double ObservableRow::*field) {
        py::array_t<double> out(py::array::ShapeContainer{T});
        double* data = out.mutable_data();
        for (py::ssize_t i = 0; i < T; ++i) data[i] = series[static_cast<std::size_t>(i)].*field;
        return out;
    };

    py::dict d;
    d["t"] = column(&ObservableRow::t);
    d["L"] = column(&ObservableRow::length);
    d["Ldot"] = column(&ObservableRow::length_rate);
    d["N"] = column(&ObservableRow::norm);
    d["E_raw"] = column(&ObservableRow::energy);
    d["E_over_N"] = column(&ObservableRow::energy_over_norm);
    d["F"] = column(&ObservableRow::force);
    d["x_avg"] = column(&ObservableRow::x_avg);
    d["coefficients"] = coefficients;
    return d;
}

} // namespace

PYBIND11_MODULE(_ptbox, m)
{
    m.doc() = "Spectral-Galerkin simulator for a PT-symmetric box with moving walls";
    m.attr("__version__") = PTBOX_VERSION;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<TrajectoryError>(m, "TrajectoryError", PyExc_ValueError);
    py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);

    py::enum_<WallKind>(m, "WallKind")
        .value("static", WallKind::Static)
        .value("harmonic", WallKind::Harmonic)
        .value("expanding", WallKind::Expanding)
        .value("contracting", WallKind::Contracting);

    py::class_<WallTrajectory>(m, "WallTrajectory")
        .def(py::init<WallKind, double, double, double>(), py::arg("kind"), py::arg("a"), py::arg("b") = 0.0,
             py::arg("omega") = 0.0)
        .def_static("fixed", &WallTrajectory::fixed, py::arg("a"))
        .def_static("harmonic", &WallTrajectory::harmonic, py::arg("a"), py::arg("b"), py::arg("omega"))
        .def_static("expanding", &WallTrajectory::expanding, py::arg("a"), py::arg("b"))
        .def_static("contracting", &WallTrajectory::contracting, py::arg("a"), py::arg("b"))
        .def_property_readonly("kind", &WallTrajectory::kind)
        .def_property_readonly("a", &WallTrajectory::a)
        .def_property_readonly("b", &WallTrajectory::b)
        .def_property_readonly("omega", &WallTrajectory::omega)
        .def("position", py::vectorize(&WallTrajectory::position))
        .def("velocity", py::vectorize(&WallTrajectory::velocity))
        .def("acceleration", py::vectorize(&WallTrajectory::acceleration))
        .def("collapse_time", &WallTrajectory::collapse_time)
        .def(py::self == py::self)
        .def("__repr__", [](const WallTrajectory& w) {
            return "WallTrajectory(" + std::string(to_string(w.kind())) + ", a=" + std::to_string(w.a()) +
                   ", b=" + std::to_string(w.b()) + ", omega=" + std::to_string(w.omega()) + ")";
        });

    py::class_<SimulationConfig>(m, "SimulationConfig")
        .def(py::init<>())
        .def_readwrite("trajectory", &SimulationConfig::trajectory)
        .def_readwrite("alpha", &SimulationConfig::alpha)
        .def_readwrite("n_modes", &SimulationConfig::n_modes)
        .def_readwrite("t_final", &SimulationConfig::t_final)
        .def_readwrite("sample_interval", &SimulationConfig::sample_interval)
        .def_property(
            "dt", [](const SimulationConfig& c) { return c.step.dt; },
            [](SimulationConfig& c, double dt) { c.step.dt = dt; })
        .def_property(
            "rtol", [](const SimulationConfig& c) { return c.step.rtol; },
            [](SimulationConfig& c, std::optional<double> rtol) { c.step.rtol = rtol; })
        .def_property(
            "initial",
            [](const SimulationConfig& c) {
                return py::make_tuple(std::string(to_string(c.initial.kind)), c.initial.index);
            },
            [](SimulationConfig& c, std::pair<std::string, int> v) {
                c.initial = {initial_kind_from_string(v.first), v.second};
            })
        .def("validate", &SimulationConfig::validate)
        .def("to_json", [](const SimulationConfig& c) { return to_json(c).dump(); })
        .def_static("from_json", [](const std::string& text) { return config_from_json(nlohmann::json::parse(text)); });

    m.def("parse_config", &parse_config, py::arg("path"));
    m.def("parse_config_string", &parse_config_string, py::arg("text"));
    m.def("default_time_step", &default_time_step, py::arg("trajectory"), py::arg("t_final"));

    m.def("static_eigenvalue", py::vectorize(&static_eigenvalue), py::arg("n"), py::arg("length"));
    m.def("static_normalization", py::vectorize(&static_normalization), py::arg("n"), py::arg("length"),
          py::arg("alpha"));
    m.def("static_eigenfunction", py::vectorize(&static_eigenfunction), py::arg("n"), py::arg("length"),
          py::arg("alpha"), py::arg("x"));
    m.def("robin_residual", &robin_residual, py::arg("n"), py::arg("length"), py::arg("alpha"), py::arg("side"));

    m.def("overlap_i2", py::vectorize(&overlap_i2), py::arg("n"), py::arg("m"));
    m.def("coupling_matrix", &coupling_matrix, py::arg("length"), py::arg("length_rate"), py::arg("alpha"),
          py::arg("n_modes"));

    m.def(
        "integrate",
        [](const SimulationConfig& config) {
            EvolutionRecord record;
            {
                py::gil_scoped_release release;
                record = integrate(config);
            }
            py::dict d = pack(record, compute_observables(record));
            d["initial_residual"] = record.initial_residual;
            return d;
        },
        py::arg("config"));

    m.def(
        "integrate_hermitian",
        [](const SimulationConfig& config) {
            HermitianRecord record;
            {
                py::gil_scoped_release release;
                record = integrate_hermitian(HermitianConfig::from(config));
            }
            return pack(record, compute_observables(record));
        },
        py::arg("config"));

    m.def("average_energy", &average_energy, py::arg("c"), py::arg("length"), py::arg("alpha"));
    m.def("average_force", &average_force, py::arg("c"), py::arg("length"), py::arg("alpha"));
    m.def("norm", &norm, py::arg("c"), py::arg("length"));

    m.def("berry_phase_analytic", &berry_phase_analytic, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("alpha"));
    m.def("berry_phase_numeric", &berry_phase_numeric, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("alpha"),
          py::arg("omega") = 1.0, py::arg("steps") = 256);
    m.def("berry_connection", &berry_connection, py::arg("n"), py::arg("length"), py::arg("alpha"),
          py::arg("points") = 0);
}
