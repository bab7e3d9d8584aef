#include "hydrocouple/cases.hpp"
#include "hydrocouple/errors.hpp"
#include "hydrocouple/io.hpp"
#include "hydrocouple/sim.hpp"
#include "hydrocouple/verify/stoker.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
namespace hc = hydrocouple;

namespace {

hc::SimConfig case_config(int id, const std::string& mode, double scale, py::object end_time) {
    hc::CaseSpec spec;
    spec.id = id;
    spec.mode = hc::parse_mode(mode);
    spec.scale = scale;
    hc::SimConfig cfg = hc::build_case(spec);
    if (!end_time.is_none()) {
        cfg.end_time = end_time.cast<double>();
    }
    return cfg;
}

// Records x probes x (eta, H, u, v).
py::array_t<double> probe_array(const std::vector<hc::ProbeRecord>& records, std::size_t probes) {
    py::array_t<double> a({records.size(), probes, std::size_t{4}});
    auto v = a.mutable_unchecked<3>();
    for (std::size_t r = 0; r < records.size(); ++r) {
        for (std::size_t p = 0; p < probes; ++p) {
            const hc::ProbeSample& s = records[r].samples[p];
            v(r, p, 0) = s.eta;
            v(r, p, 1) = s.h;
            v(r, p, 2) = s.u;
            v(r, p, 3) = s.v;
        }
    }
    return a;
}

py::dict run_config(const hc::SimConfig& cfg) {
    hc::RunResult r;
    {
        py::gil_scoped_release release;
        r = hc::run(cfg);
    }
    std::vector<double> times;
    for (const hc::ProbeRecord& rec : r.records) {
        times.push_back(rec.t);
    }
    std::vector<std::string> ids;
    for (const hc::Probe& p : cfg.domain.probes) {
        ids.push_back(p.id);
    }
    py::dict out;
    out["steps"] = r.steps;
    out["wall_seconds"] = r.wall_seconds;
    out["initial_volume"] = r.initial_volume;
    out["final_volume"] = r.final_volume;
    out["clip_events"] = r.diagnostics.clip_events;
    out["probe_ids"] = ids;
    out["times"] = py::array_t<double>(times.size(), times.data());
    out["probes"] = probe_array(r.records, ids.size());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coupled 1D channel / 2D floodplain shallow-water solver";

    // Translators are tried newest first, so the base class goes first.
    py::register_exception<hc::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<hc::StabilityError>(m, "StabilityError", PyExc_RuntimeError);
    py::register_exception<hc::ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("case_config_text",
          [](int id, const std::string& mode, double scale) {
              std::ostringstream out;
              hc::write_config(out, case_config(id, mode, scale, py::none()));
              return out.str();
          },
          py::arg("case_id"), py::arg("mode") = "hcm", py::arg("scale") = 1.0,
          "Configuration text of a built-in case.");

    m.def("run_case",
          [](int id, const std::string& mode, double scale, py::object end_time) {
              return run_config(case_config(id, mode, scale, end_time));
          },
          py::arg("case_id"), py::arg("mode") = "hcm", py::arg("scale") = 1.0,
          py::arg("end_time") = py::none(),
          "Run a built-in case; probes come back as an array of shape (records, probes, 4).");

    m.def("run_config_text",
          [](const std::string& text) {
              std::istringstream in(text);
              return run_config(hc::parse_config(in));
          },
          py::arg("text"), "Run a configuration given as text.");

    py::class_<hc::Simulation>(m, "Simulation")
        .def(py::init([](int id, const std::string& mode, double scale) {
                 return hc::Simulation(case_config(id, mode, scale, py::none()));
             }),
             py::arg("case_id"), py::arg("mode") = "hcm", py::arg("scale") = 1.0)
        .def_property_readonly("time", &hc::Simulation::time)
        .def_property_readonly("steps", &hc::Simulation::steps)
        .def("cfl_dt", &hc::Simulation::cfl_dt)
        .def("advance", &hc::Simulation::advance, py::arg("dt"))
        .def("advance_to", &hc::Simulation::advance_to, py::arg("t"),
             py::call_guard<py::gil_scoped_release>())
        .def("total_volume", &hc::Simulation::total_volume)
        .def("probes",
             [](const hc::Simulation& s) {
                 const hc::ProbeRecord r = s.sample_probes();
                 return probe_array({r}, r.samples.size());
             })
        .def("channel_areas",
             [](const hc::Simulation& s) {
                 std::vector<double> a;
                 for (const hc::State1D& w : s.channel()) {
                     a.push_back(w.area);
                 }
                 return py::array_t<double>(a.size(), a.data());
             })
        .def("floodplain_depths", [](const hc::Simulation& s, std::size_t block) {
            const hc::Grid2D& g = s.mesh().floodplain.blocks.at(block);
            py::array_t<double> a({static_cast<std::size_t>(g.ny), static_cast<std::size_t>(g.nx)});
            auto v = a.mutable_unchecked<2>();
            for (int c = 0; c < g.cell_count(); ++c) {
                v(g.iy(c), g.ix(c)) = s.field2d()[block][c].h;
            }
            return a;
        }, py::arg("block") = 0);

    py::class_<hc::verify::Stoker>(m, "Stoker")
        .def(py::init<double, double, double>(), py::arg("h_left"), py::arg("h_right"),
             py::arg("gravity") = 9.81)
        .def_readonly("h_star", &hc::verify::Stoker::h_star)
        .def_readonly("u_star", &hc::verify::Stoker::u_star)
        .def_readonly("shock_speed", &hc::verify::Stoker::shock_speed)
        .def("depth", py::overload_cast<double, double, double>(&hc::verify::Stoker::depth, py::const_),
             py::arg("x"), py::arg("t"), py::arg("x_dam"))
        .def("mean_depth", &hc::verify::Stoker::mean_depth, py::arg("xa"), py::arg("xb"),
             py::arg("t"), py::arg("x_dam"));
}
