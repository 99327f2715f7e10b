#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dbr/characterize.hpp"
#include "dbr/corpus.hpp"
#include "dbr/error.hpp"
#include "dbr/graph.hpp"
#include "dbr/report.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Distance-regular / distance-biregular graph recognition";

    py::register_exception<dbr::Error>(m, "Error");

    py::class_<dbr::Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &dbr::Graph::vertex_count)
        .def_property_readonly("edges", &dbr::Graph::edges)
        .def("degree", &dbr::Graph::degree)
        .def("adjacent", &dbr::Graph::adjacent)
        .def("is_regular", &dbr::Graph::is_regular)
        .def("__repr__", [](const dbr::Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_edge_list", &dbr::parse_edge_list, py::arg("text"));
    m.def("to_edge_list", &dbr::to_edge_list, py::arg("graph"));
    m.def(
        "generate",
        [](const std::string& name, std::vector<int> params) {
            return dbr::generate(name, std::move(params));
        },
        py::arg("name"), py::arg("params") = std::vector<int>{});
    m.def("known_families", &dbr::known_families);
    m.def(
        "enumerate_small_bipartite",
        [](int max_n) { return dbr::enumerate_small_bipartite(max_n); },
        py::arg("max_n"));
    m.def(
        "girth",
        [](const dbr::Graph& g) -> py::object {
            auto cycle = dbr::girth(g);
            return cycle ? py::object(py::int_(*cycle)) : py::none();
        },
        py::arg("graph"));
    m.def(
        "diameter",
        [](const dbr::Graph& g) { return dbr::DistanceData(g).diameter(); },
        py::arg("graph"));
    m.def("is_bipartite", &dbr::is_bipartite, py::arg("graph"));
    m.def(
        "spectrum",
        [](const dbr::Graph& g, double tol) {
            auto dec = dbr::decompose(g, tol);
            std::vector<std::pair<double, int>> out;
            for (int r = 0; r < dec.count(); ++r)
                out.emplace_back(dec.eigenvalue(r), dec.multiplicity(r));
            return out;
        },
        py::arg("graph"), py::arg("tol") = dbr::kDefaultTol);
    m.def(
        "classify",
        [](const dbr::Graph& g, double tol) {
            return std::string(dbr::to_string(dbr::classify(g, tol).classification));
        },
        py::arg("graph"), py::arg("tol") = dbr::kDefaultTol);
    m.def(
        "analyze",
        [](const dbr::Graph& g, double tol) {
            return json_to_py(dbr::analyze_report(g, tol));
        },
        py::arg("graph"), py::arg("tol") = dbr::kDefaultTol);
    m.def(
        "excess_report",
        [](const dbr::Graph& g, double tol) {
            return json_to_py(dbr::excess_command_report(g, tol));
        },
        py::arg("graph"), py::arg("tol") = dbr::kDefaultTol);
    m.def(
        "halved_report",
        [](const dbr::Graph& g, double tol) {
            return json_to_py(dbr::halved_command_report(g, tol));
        },
        py::arg("graph"), py::arg("tol") = dbr::kDefaultTol);

    m.attr("__version__") = dbr::kVersion;
}
