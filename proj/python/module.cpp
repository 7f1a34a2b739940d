#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "hermitia/classify.hpp"
#include "hermitia/corpus.hpp"
#include "hermitia/flow.hpp"

namespace py = pybind11;
using namespace hermitia;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json py_to_json(const py::object& obj) {
    std::string s =
        py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return nlohmann::json::parse(s);
}

}  // namespace

PYBIND11_MODULE(_hermitia, m) {
    m.doc() = "invariant Hermitian geometry on Lie algebras";

    py::class_<Hermitian>(m, "Hermitian")
        .def_property_readonly("dim", &Hermitian::dim)
        .def_property_readonly("n", &Hermitian::n)
        .def_property_readonly("J",
                               [](const Hermitian& h) {
                                   return Eigen::MatrixXd(h.J());
                               })
        .def_property_readonly("g",
                               [](const Hermitian& h) {
                                   return Eigen::MatrixXd(h.g());
                               })
        .def("nijenhuis_residual", &Hermitian::nijenhuis_residual)
        .def("to_json",
             [](const Hermitian& h) { return json_to_py(h.to_json()); })
        .def_static("from_json", [](const py::object& obj) {
            return Hermitian::from_json(py_to_json(obj));
        });

    m.def("corpus_list", [] {
        std::vector<std::string> names;
        for (const auto& e : corpus::entries()) names.push_back(e.name);
        return names;
    });
    m.def("corpus_build", &corpus::build_uri, py::arg("uri"));

    m.def(
        "classify",
        [](const Hermitian& h, double tol) {
            return json_to_py(classify(h, tol).to_json());
        },
        py::arg("structure"), py::arg("tol") = 1e-9);
    m.def("skt_residual", &skt_residual, py::arg("structure"));

    m.def(
        "skt_feasibility",
        [](const Hermitian& h) {
            SKTFeasibility r = skt_feasibility(h.sc(), h.J());
            py::dict d;
            d["feasible"] = r.feasible;
            d["certificate"] = r.certificate;
            return d;
        },
        py::arg("structure"));

    m.def(
        "vaisman_f_ode",
        [](double h, double theta_sq, double t_max, double dt) {
            VaismanScalarTrajectory tr = vaisman_f_ode(h, theta_sq, t_max, dt);
            py::dict d;
            std::vector<double> t, f;
            for (const auto& s : tr.samples) {
                t.push_back(s.t);
                f.push_back(s.f);
            }
            d["t"] = t;
            d["f"] = f;
            d["f_end"] = f.back();
            d["degenerated"] = tr.degenerated;
            if (tr.degenerated) d["hitting_time"] = tr.hitting_time;
            return d;
        },
        py::arg("h"), py::arg("theta0_norm_sq"), py::arg("t_max"),
        py::arg("dt") = 1e-3);

    m.def(
        "integrate_pluriclosed",
        [](const Hermitian& h, double t_max, double dt) {
            FlowTrajectory tr = integrate_pluriclosed(h, t_max, dt);
            py::dict d;
            std::vector<double> t, skt, min_eig;
            for (const auto& s : tr.samples) {
                t.push_back(s.t);
                skt.push_back(s.skt_monitor);
                min_eig.push_back(s.min_eig);
            }
            d["t"] = t;
            d["skt_monitor"] = skt;
            d["min_eig"] = min_eig;
            d["positivity_failed"] = tr.positivity_failed;
            return d;
        },
        py::arg("structure"), py::arg("t_max"), py::arg("dt") = 1e-3);
}
