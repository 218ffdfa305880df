#include "rescurv/graph.hpp"

#include "rescurv/error.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace rescurv {

namespace {

std::string edge_name(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

WeightedGraph::WeightedGraph(std::size_t n, std::span<const EdgeSpec> edges) : n_(n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "graph needs at least one vertex");
    std::set<std::pair<Vertex, Vertex>> seen;
    edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw Error(ErrorCode::IndexOutOfRange, "edge " + edge_name(e.u, e.v) + " with n=" + std::to_string(n));
        if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "edge " + edge_name(e.u, e.v));
        Rational r = e.r.value_or(Rational(1));
        r.canonicalize();
        if (r <= 0)
            throw Error(ErrorCode::NonpositiveResistance, "edge " + edge_name(e.u, e.v) + " has r=" + to_string(r));
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw Error(ErrorCode::DuplicateEdge, "edge " + edge_name(e.u, e.v));
        edges_.push_back({e.u, e.v, std::move(r)});
    }
    index();
}

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges, int) : n_(n), edges_(std::move(edges)) {
    index();
}

void WeightedGraph::index() {
    incident_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        incident_[edges_[i].u].push_back(i);
        incident_[edges_[i].v].push_back(i);
    }
}

void WeightedGraph::check_vertex(Vertex v) const {
    if (v >= n_)
        throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " with n=" + std::to_string(n_));
}

std::size_t WeightedGraph::degree(Vertex v) const {
    check_vertex(v);
    return incident_[v].size();
}

const std::vector<std::size_t>& WeightedGraph::incident(Vertex v) const {
    check_vertex(v);
    return incident_[v];
}

Vertex WeightedGraph::other_end(std::size_t edge_index, Vertex v) const {
    const Edge& e = edges_.at(edge_index);
    return e.u == v ? e.v : e.u;
}

std::optional<std::size_t> WeightedGraph::find_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    for (std::size_t i : incident_[u])
        if (other_end(i, u) == v) return i;
    return std::nullopt;
}

bool WeightedGraph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (std::size_t i : incident_[x]) {
            Vertex y = other_end(i, x);
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n_;
}

bool WeightedGraph::has_unit_resistances() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.r == 1; });
}

WeightedGraph WeightedGraph::delete_edge(Vertex u, Vertex v) const {
    auto idx = find_edge(u, v);
    if (!idx) throw Error(ErrorCode::NoSuchEdge, "edge " + edge_name(u, v));
    std::vector<Edge> kept;
    kept.reserve(edges_.size() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (i != *idx) kept.push_back(edges_[i]);
    return WeightedGraph(n_, std::move(kept), 0);
}

WeightedGraph WeightedGraph::add_edge(Vertex u, Vertex v, const Rational& r) const {
    std::vector<EdgeSpec> specs;
    specs.reserve(edges_.size() + 1);
    for (const auto& e : edges_) specs.push_back({e.u, e.v, e.r});
    specs.push_back({u, v, r});
    return WeightedGraph(n_, specs);
}

WeightedGraph build_graph(std::size_t n, std::span<const EdgeSpec> edges) { return WeightedGraph(n, edges); }

bool is_path(const WeightedGraph& g) {
    if (g.edge_count() + 1 != g.vertex_count() || !g.is_connected()) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

} // namespace rescurv
