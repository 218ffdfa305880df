// Low-level bindings. Exact values cross the boundary as "p/q" strings; the
// package __init__ turns them into fractions.Fraction.

#include "rescurv/bounds.hpp"
#include "rescurv/curvature.hpp"
#include "rescurv/error.hpp"
#include "rescurv/generators.hpp"
#include "rescurv/graph_io.hpp"
#include "rescurv/grids_ladders.hpp"
#include "rescurv/products.hpp"
#include "rescurv/resistance_laws.hpp"
#include "rescurv/spectral.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

namespace py = pybind11;
using namespace rescurv;

namespace {

using EdgeTuple = std::tuple<Vertex, Vertex, std::string>;

WeightedGraph make_graph(std::size_t n, const std::vector<EdgeTuple>& edges) {
    std::vector<EdgeSpec> specs;
    specs.reserve(edges.size());
    for (const auto& [u, v, r] : edges) specs.push_back({u, v, parse_rational(r)});
    return WeightedGraph(n, specs);
}

std::vector<EdgeTuple> edge_tuples(const WeightedGraph& g) {
    std::vector<EdgeTuple> out;
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, to_string(e.r));
    return out;
}

py::object scalar(const Rational& q) { return py::str(to_string(q)); }
py::object scalar(double x) { return py::float_(x); }

template <class T>
py::list vector_out(const std::vector<T>& v) {
    py::list out;
    for (const auto& x : v) out.append(scalar(x));
    return out;
}

template <class T>
py::list matrix_out(const DenseMatrix<T>& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(scalar(m(i, j)));
        rows.append(row);
    }
    return rows;
}

Backend backend_of(const std::string& s) { return parse_backend(s); }

py::list curvatures(const WeightedGraph& g, const std::string& backend) {
    if (backend_of(backend) == Backend::exact) return vector_out(node_curvatures<Rational>(g).p);
    return vector_out(node_curvatures<double>(g).p);
}

py::list resistances(const WeightedGraph& g, const std::string& backend) {
    if (backend_of(backend) == Backend::exact) return matrix_out(resistance_matrix<Rational>(g).matrix);
    return matrix_out(resistance_matrix<double>(g).matrix);
}

py::object pair_resistance(const WeightedGraph& g, Vertex u, Vertex v, const std::string& backend) {
    if (backend_of(backend) == Backend::exact) return scalar(effective_resistance<Rational>(g, u, v));
    return scalar(effective_resistance<double>(g, u, v));
}

py::dict product_report(const std::string& shorthand, const std::string& backend) {
    ProductDescriptor pd = parse_shorthand(shorthand);
    py::dict d;
    d["n"] = pd.total_n();
    d["sizes"] = pd.sizes();
    if (backend_of(backend) == Backend::exact) d["curvatures"] = vector_out(product_node_curvatures<Rational>(pd).p);
    else d["curvatures"] = vector_out(product_node_curvatures<double>(pd).p);
    bool paths = true;
    for (const auto& f : pd.factors()) paths &= is_path(f);
    if (paths) {
        py::list pos;
        for (Position p : classify_boundary_interior(pd)) pos.append(std::string(to_string(p)));
        d["positions"] = pos;
    }
    return d;
}

py::dict grid_report(std::size_t m, std::size_t n, std::size_t max_side) {
    GridTheoremReport r = verify_grid_theorem(m, n, Backend::exact, max_side);
    py::dict d;
    d["m"] = r.m;
    d["n"] = r.n;
    d["interior_all_negative"] = r.interior_all_negative;
    d["boundary_all_nonnegative"] = r.boundary_all_nonnegative;
    d["boundary_min"] = scalar(r.boundary_min);
    d["boundary_argmin"] = r.boundary_argmin;
    d["interior_max"] = scalar(r.interior_max);
    d["boundary_bound_holds"] = r.boundary_bound_holds;
    d["holds"] = r.holds();
    return d;
}

py::object series_parallel(std::size_t n, const std::vector<EdgeTuple>& edges, Vertex s, Vertex t) {
    std::vector<NetworkEdge> net;
    for (const auto& [u, v, r] : edges) net.push_back({u, v, parse_rational(r)});
    auto r = reduce_to_resistance(TerminalNetwork(n, std::move(net), s, t));
    if (!r) return py::none();
    return scalar(*r);
}

} // namespace

PYBIND11_MODULE(_rescurv, m) {
    m.doc() = "Effective resistance and node resistance curvature";

    py::register_exception<Error>(m, "RescurvError", PyExc_ValueError);

    py::class_<WeightedGraph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &WeightedGraph::vertex_count)
        .def_property_readonly("edge_count", &WeightedGraph::edge_count)
        .def("edges", &edge_tuples)
        .def("degree", &WeightedGraph::degree)
        .def("is_connected", &WeightedGraph::is_connected)
        .def("delete_edge", &WeightedGraph::delete_edge)
        .def("to_json", [](const WeightedGraph& g) { return graph_to_json(g); })
        .def_static("from_json", [](const std::string& s) { return graph_from_json(s); })
        .def("__eq__", [](const WeightedGraph& a, const WeightedGraph& b) { return a == b; })
        .def("__repr__", [](const WeightedGraph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("path", &path);
    m.def("cycle", &cycle);
    m.def("complete", &complete);
    m.def("star", &star);
    m.def("hypercube", &hypercube);
    m.def("grid", &grid);
    m.def("cartesian_product", &cartesian_product);
    m.def("from_shorthand", [](const std::string& s) { return parse_shorthand(s).graph(); });

    m.def("node_curvatures", &curvatures, py::arg("g"), py::arg("backend") = "exact");
    m.def("resistance_matrix", &resistances, py::arg("g"), py::arg("backend") = "exact");
    m.def("effective_resistance", &pair_resistance, py::arg("g"), py::arg("u"), py::arg("v"),
          py::arg("backend") = "exact");
    m.def("laplacian_eigenvalues", [](const WeightedGraph& g) { return eigensystem(laplacian<double>(g)).values; });
    m.def("product_report", &product_report, py::arg("shorthand"), py::arg("backend") = "exact");
    m.def("verify_grid_theorem", &grid_report, py::arg("m"), py::arg("n"),
          py::arg("max_side") = kDefaultMaxExactGridSide);

    m.def("ladder_alpha", [](std::size_t n) { return vector_out(ladder_alpha(n).values()); });
    m.def("rung_resistance", [](std::size_t n, std::size_t k) { return scalar(rung_resistance(n, k)); });
    m.def("rail_resistance", [](std::size_t n, std::size_t k) { return scalar(rail_resistance(n, k)); });
    m.def("ladder_curvatures", [](std::size_t n) { return vector_out(ladder_curvatures(n).p); });

    m.def("series_parallel_resistance", &series_parallel, py::arg("n"), py::arg("edges"), py::arg("s"),
          py::arg("t"));
    m.def(
        "mc_effective_resistance",
        [](const WeightedGraph& g, Vertex u, Vertex v, std::uint64_t walks, std::uint64_t seed, unsigned threads) {
            MonteCarloEstimate e;
            {
                py::gil_scoped_release release;
                e = mc_effective_resistance(g, u, v, walks, seed, threads);
            }
            return std::make_tuple(e.estimate, e.standard_error);
        },
        py::arg("g"), py::arg("u"), py::arg("v"), py::arg("walks"), py::arg("seed"), py::arg("threads") = 1);

    m.def("upper_bound_ub", [](const std::string& omega, std::size_t d) {
        return scalar(upper_bound_ub(parse_rational(omega), d));
    });
    m.def("tree_bound", [](const std::string& omega, std::size_t d, std::size_t r, bool literal) {
        return scalar(tree_bound({parse_rational(omega), d, r},
                                 literal ? TreeRecurrence::literal : TreeRecurrence::root_degree));
    }, py::arg("omega"), py::arg("d"), py::arg("r"), py::arg("literal") = false);
    m.def("validate_bounds", [](const WeightedGraph& g1, const WeightedGraph& g2) {
        py::list rows;
        for (const auto& r : validate_bounds<Rational>(g1, g2)) {
            py::dict d;
            d["x"] = r.x;
            d["y"] = r.y;
            d["actual"] = scalar(r.actual);
            d["lb"] = r.lb;
            d["ub"] = scalar(r.ub);
            d["lb_holds"] = r.lb_holds;
            d["ub_holds"] = r.ub_holds;
            rows.append(d);
        }
        return rows;
    });
}
