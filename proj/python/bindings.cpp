#include <indtree/constructions.hpp>
#include <indtree/enumerator.hpp>
#include <indtree/io.hpp>
#include <indtree/report_format.hpp>
#include <indtree/solver.hpp>
#include <indtree/verifier.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace indtree;

namespace {
    // reports cross the boundary as their JSON text; the Python side parses them
    auto verify(const std::string & claim, int max_n, int k, bool allow_large, int threads) -> std::string
    {
        const EnumerationOptions options{allow_large, threads};
        if (claim == "theorem1")
            return to_json(verify_theorem1(max_n, options), false);
        if (claim == "theorem2")
            return to_json(verify_theorem2(max_n, options), false);
        if (claim == "corollary")
            return to_json(verify_corollary(max_n, options), false);
        if (claim == "counterexample_b5")
            return to_json(verify_counterexample_b5(), false);
        if (claim == "diameter_remark")
            return to_json(verify_diameter_remark(k, max_n, options), false);
        throw py::value_error("unknown claim: " + claim);
    }

    // runs without the GIL, so no Python objects here
    auto solve(const std::string & graph6, std::optional<int> root) -> std::pair<int, std::vector<Vertex>>
    {
        auto g = from_graph6(graph6);
        auto result = root ? max_induced_tree_through({g, *root}) : max_induced_tree(g);
        return {result.size, result.witness.to_vector()};
    }
}

PYBIND11_MODULE(_indtree, m)
{
    m.doc() = "Maximum induced trees in triangle-free graphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_ValueError);

    m.def("normalise_graph6", [](const std::string & s) { return to_graph6(from_graph6(s)); });
    m.def("graph6_from_edges", [](int n, const std::vector<std::pair<int, int>> & edges) {
        return to_graph6(Graph::from_edge_list(n, edges));
    }, py::arg("n"), py::arg("edges"));
    m.def("graph6_edges", [](const std::string & s) { return from_graph6(s).edges(); });
    m.def("order", [](const std::string & s) { return from_graph6(s).order(); });

    m.def("solve", &solve, py::arg("graph6"), py::arg("root") = py::none(), py::call_guard<py::gil_scoped_release>());
    m.def("brute_force_t", [](const std::string & s, std::optional<int> root) {
        return brute_force_t(from_graph6(s), root).size;
    }, py::arg("graph6"), py::arg("root") = py::none());

    m.def("build_g_k", [](int k) { auto rg = build_g_k(k); return py::make_tuple(to_graph6(rg.graph), rg.root); });
    m.def("build_b_k", [](int k) { return to_graph6(build_b_k(k)); });
    m.def("build_knn_minus_pm", [](int m) { return to_graph6(build_knn_minus_pm(m)); });
    m.def("t3_star_formula", &t3_star_formula);

    m.def("connected_triangle_free_graphs", [](int n, bool allow_large, int threads) {
        std::vector<std::string> out;
        enumerate_connected_triangle_free(n, [&](const Graph & g) { out.push_back(to_graph6(g)); }, {allow_large, threads});
        return out;
    }, py::arg("n"), py::arg("allow_large") = false, py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());

    m.def("tabulate_json", [](int n, bool allow_large, int threads) {
        return to_json(tabulate(n, {allow_large, threads}), false);
    }, py::arg("n"), py::arg("allow_large") = false, py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());

    m.def("verify_json", &verify, py::arg("claim"), py::arg("max_n") = default_max_order, py::arg("k") = 3,
          py::arg("allow_large") = false, py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
}
