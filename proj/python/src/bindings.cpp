#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vcw/config.hpp"
#include "vcw/diagnostics.hpp"
#include "vcw/error.hpp"
#include "vcw/heat_reference.hpp"
#include "vcw/profile.hpp"
#include "vcw/scenario.hpp"

namespace py = pybind11;
using namespace vcw;

namespace {

py::dict report_dict(const RunReport& r) {
    py::dict out;
    out["scenario"] = std::string(to_string(r.scenario));
    py::dict constants, metrics;
    for (const auto& [k, v] : r.constants) constants[py::str(k)] = v;
    for (const auto& [k, v] : r.metrics) metrics[py::str(k)] = v;
    out["constants"] = constants;
    out["metrics"] = metrics;
    py::list checks;
    for (const Check& c : r.checks) {
        py::dict d;
        d["name"] = c.name;
        d["measured"] = c.measured;
        d["threshold"] = c.threshold;
        d["sense"] = c.sense == Check::Sense::at_most ? "at_most" : "at_least";
        d["pass"] = c.pass;
        checks.append(d);
    }
    out["checks"] = checks;
    out["warnings"] = r.warnings;
    out["error"] = r.error ? py::object(py::str(*r.error)) : py::object(py::none());
    out["all_pass"] = r.all_pass();
    out["manifest"] = r.manifest;
    out["exit_code"] = exit_code(r);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bindings for the vcw core library";

    static py::exception<Error> error(m, "VcwError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object type = py::reinterpret_borrow<py::object>(error);
            py::object exc = type(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    py::class_<GasInputs>(m, "GasInputs")
        .def(py::init<>())
        .def_readwrite("R", &GasInputs::R)
        .def_readwrite("gamma", &GasInputs::gamma)
        .def_readwrite("mu", &GasInputs::mu)
        .def_readwrite("kappa", &GasInputs::kappa)
        .def_readwrite("theta_minus", &GasInputs::theta_minus)
        .def_readwrite("theta_plus", &GasInputs::theta_plus)
        .def_readwrite("v_minus", &GasInputs::v_minus)
        .def_readwrite("u_b", &GasInputs::u_b);

    py::class_<PhysParams>(m, "PhysParams")
        .def_readonly("R", &PhysParams::R)
        .def_readonly("gamma", &PhysParams::gamma)
        .def_readonly("mu", &PhysParams::mu)
        .def_readonly("kappa", &PhysParams::kappa)
        .def_readonly("theta_minus", &PhysParams::theta_minus)
        .def_readonly("theta_plus", &PhysParams::theta_plus)
        .def_readonly("v_minus", &PhysParams::v_minus)
        .def_readonly("u_b", &PhysParams::u_b)
        .def_readonly("p_plus", &PhysParams::p_plus)
        .def_readonly("v_plus", &PhysParams::v_plus)
        .def_readonly("s", &PhysParams::s)
        .def_readonly("a", &PhysParams::a)
        .def_readonly("c_v", &PhysParams::c_v);

    m.def("build_params", &build_params, py::arg("inputs") = GasInputs{});

    py::class_<ProfileParams>(m, "ProfileParams")
        .def(py::init([](double alpha, double delta0) { return ProfileParams{alpha, delta0, {}}; }),
             py::arg("alpha") = 1.0, py::arg("delta0") = 0.5)
        .def_readwrite("alpha", &ProfileParams::alpha)
        .def_readwrite("delta0", &ProfileParams::delta0);

    m.def("theta0", &theta0_eval, py::arg("x"), py::arg("params"), py::arg("profile") = ProfileParams{},
          "Initial temperature at x.");

    py::class_<Grid1D>(m, "Grid1D")
        .def(py::init<double, std::size_t>(), py::arg("length"), py::arg("cells"))
        .def_property_readonly("length", &Grid1D::length)
        .def_property_readonly("cells", &Grid1D::cells)
        .def_property_readonly("dx", &Grid1D::dx)
        .def("x", &Grid1D::x);

    auto values = [](Field ProfileState::*member) {
        return [member](const ProfileState& s) { return (s.*member).values(); };
    };
    py::class_<ProfileState>(m, "ProfileState")
        .def_readonly("t", &ProfileState::t)
        .def_property_readonly("theta", values(&ProfileState::theta))
        .def_property_readonly("V", values(&ProfileState::V))
        .def_property_readonly("U", values(&ProfileState::U))
        .def_property_readonly("F", values(&ProfileState::F))
        .def_property_readonly("G", values(&ProfileState::G))
        .def_readonly("f_discrepancy", &ProfileState::f_discrepancy)
        .def_readonly("layer_near_boundary", &ProfileState::layer_near_boundary);

    m.def("build_profile", &build_profile, py::arg("grid"), py::arg("params"),
          py::arg("profile") = ProfileParams{});
    m.def(
        "advance_profile",
        [](const ProfileState& st, double t_end, const PhysParams& p, const Grid1D& g, double safety) {
            return evolve_profile(st, t_end, p, g, safety);
        },
        py::arg("state"), py::arg("t_end"), py::arg("params"), py::arg("grid"), py::arg("safety") = 0.4,
        "Advances the profile to t_end in equal stable steps.");

    m.def(
        "eval_theta2_and_K",
        [](double x, double t, const PhysParams& p, const ProfileParams& prof) {
            const Theta2Value v = eval_theta2_and_K(x, t, p, prof);
            return py::make_tuple(v.theta2, v.K);
        },
        py::arg("x"), py::arg("t"), py::arg("params"), py::arg("profile") = ProfileParams{});

    m.def(
        "fit_power_law",
        [](const std::vector<double>& t, const std::vector<double>& value, double t0, double t1) {
            if (t.size() != value.size()) throw py::value_error("t and value differ in length");
            std::vector<TimeValue> series;
            for (std::size_t i = 0; i < t.size(); ++i) series.push_back({t[i], value[i]});
            const DecayFit f = fit_power_law(series, t0, t1);
            py::dict d;
            d["exponent"] = f.exponent;
            d["amplitude"] = f.amplitude;
            d["goodness"] = f.goodness;
            d["samples"] = f.samples;
            return d;
        },
        py::arg("t"), py::arg("value"), py::arg("t0"), py::arg("t1"));

    m.def("entropy_phi", &entropy_phi, py::arg("z"));

    py::class_<RunConfig>(m, "RunConfig")
        .def_property_readonly("scenario", [](const RunConfig& c) { return std::string(to_string(c.scenario)); })
        .def_readonly("length", &RunConfig::length)
        .def_readonly("cells", &RunConfig::cells)
        .def_readonly("horizon", &RunConfig::horizon)
        .def_readonly("out_dir", &RunConfig::out_dir)
        .def("to_text", [](const RunConfig& c) { return to_config_text(c); });

    m.def("parse_config", &parse_config, py::arg("text"));
    m.def("load_config", &load_config, py::arg("path"));
    m.def(
        "run_scenario",
        [](const RunConfig& cfg, const std::optional<std::filesystem::path>& out_dir) {
            ScenarioResult res = [&] {
                py::gil_scoped_release release;
                return run_scenario(cfg);
            }();
            if (out_dir) write_outputs(res.report, res.streams, *out_dir);
            return report_dict(res.report);
        },
        py::arg("config"), py::arg("out_dir") = py::none(),
        "Runs a scenario; writes its files when out_dir is given. Returns the report as a dict.");
}
