#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regpow/harness.hpp"
#include "regpow/io.hpp"
#include "regpow/powers.hpp"
#include "regpow/regularity.hpp"

namespace py = pybind11;
using namespace regpow;

namespace {

// Python sees 1-based vertices and edges, as in the file formats.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> e;
    for (auto [u, v] : edges) e.emplace_back(u - 1, v - 1);
    return Graph(n, e);
}

std::vector<std::pair<int, int>> graph_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) out.emplace_back(u + 1, v + 1);
    return out;
}

MonomialIdeal make_ideal(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<ExponentVector> v;
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != n) throw DimensionError("generator length differs from n");
        v.emplace_back(std::span<const int>(g));
    }
    return minimalize(n, std::move(v));
}

std::vector<std::vector<int>> ideal_gens(const MonomialIdeal& I) {
    std::vector<std::vector<int>> out;
    for (const auto& g : I.gens()) out.push_back(g.to_vector());
    return out;
}

int regularity_with(const MonomialIdeal& I, const std::string& field, const std::string& method) {
    const Field f = Field::parse(field);
    if (method == "degree-complex") return regularity(I, f);
    if (method == "koszul") return reg_from_betti(betti_oracle(I, f));
    if (method == "both") {
        const int a = regularity(I, f);
        if (a != reg_from_betti(betti_oracle(I, f))) throw CrossCheckMismatch("methods disagree on " + I.to_string());
        return a;
    }
    throw DomainError("unknown method '" + method + "'");
}

} // namespace

PYBIND11_MODULE(_regpow, m) {
    m.doc() = "Regularity of powers and symbolic powers of monomial ideals";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CrossCheckMismatch>(m, "CrossCheckMismatch", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("edges", &graph_edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph(" + graph_to_json(g).dump() + ")"; });

    py::class_<MonomialIdeal>(m, "Ideal")
        .def(py::init(&make_ideal), py::arg("n"), py::arg("gens"))
        .def_property_readonly("n", &MonomialIdeal::num_vars)
        .def_property_readonly("gens", &ideal_gens)
        .def("contains", [](const MonomialIdeal& I, const std::vector<int>& a) {
            return I.contains(ExponentVector(std::span<const int>(a)));
        })
        .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
        .def("__len__", &MonomialIdeal::num_gens)
        .def("__str__", &MonomialIdeal::to_string)
        .def("__repr__", [](const MonomialIdeal& I) { return "Ideal(" + I.to_string() + ")"; });

    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("gnp_graph", &gnp_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("graph_from_text", [](const std::string& s) { return graph_from_text(s); });
    m.def("graph_to_text", &graph_to_text);

    m.def("edge_ideal", &edge_ideal);
    m.def("power", &power, py::arg("ideal"), py::arg("s"));
    m.def("symbolic_power", py::overload_cast<const MonomialIdeal&, int>(&symbolic_power), py::arg("ideal"),
          py::arg("s"));
    m.def("is_gap_free", &is_gap_free);
    m.def("is_chordal", &is_chordal);
    m.def("complement", &complement);

    m.def("regularity", &regularity_with, py::arg("ideal"), py::arg("field") = "gf2",
          py::arg("method") = "degree-complex", py::call_guard<py::gil_scoped_release>());
    m.def(
        "has_linear_resolution",
        [](const MonomialIdeal& I, const std::string& field) { return has_linear_resolution(I, Field::parse(field)); },
        py::arg("ideal"), py::arg("field") = "gf2");
    m.def(
        "betti_numbers",
        [](const MonomialIdeal& I, const std::string& field) {
            std::map<std::pair<int, int>, int> out;
            for (const auto& [key, beta] : betti_oracle(I, Field::parse(field)).graded()) {
                if (beta) out[key] = beta;
            }
            return out;
        },
        py::arg("ideal"), py::arg("field") = "gf2");
    m.def(
        "extremal_certificates",
        [](const MonomialIdeal& I, const std::string& field) {
            std::vector<std::string> out;
            for (const auto& c : extremal_pairs(I, Field::parse(field))) out.push_back(certificate_to_json(c).dump());
            return out;
        },
        py::arg("ideal"), py::arg("field") = "gf2");

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, std::optional<int> nmax, std::optional<std::size_t> samples, std::uint64_t seed,
           const std::string& field, int jobs) {
            VerifyParams p;
            p.nmax = nmax;
            p.samples = samples;
            p.seed = seed;
            p.field = Field::parse(field);
            p.jobs = jobs;
            SuiteResult r;
            {
                py::gil_scoped_release release;
                r = run_suite(name, p);
            }
            std::vector<std::string> lines;
            for (const auto& line : r.lines) lines.push_back(line.dump());
            return std::make_pair(lines, r.summary().dump());
        },
        py::arg("name"), py::arg("nmax") = py::none(), py::arg("samples") = py::none(), py::arg("seed") = 1,
        py::arg("field") = "gf2", py::arg("jobs") = 1);
}
