#pragma once

#include "rescurv/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rescurv {

using Vertex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;
    Rational r;  // resistance, > 0

    bool operator==(const Edge&) const = default;
};

struct EdgeSpec {
    Vertex u;
    Vertex v;
    std::optional<Rational> r;
};

/// Undirected simple graph with positive per-edge resistances on vertices
/// 0..n-1. Immutable once built; every mutation returns a new graph.
class WeightedGraph {
public:
    /// Validates and builds. Missing resistances default to 1.
    WeightedGraph(std::size_t n, std::span<const EdgeSpec> edges);
    WeightedGraph(std::size_t n, std::initializer_list<EdgeSpec> edges)
        : WeightedGraph(n, std::span<const EdgeSpec>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Unweighted degree.
    std::size_t degree(Vertex v) const;

    /// Incident edge indices of v, in edge-list order.
    const std::vector<std::size_t>& incident(Vertex v) const;

    Vertex other_end(std::size_t edge_index, Vertex v) const;

    std::optional<std::size_t> find_edge(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

    bool is_connected() const;
    bool has_unit_resistances() const;

    WeightedGraph delete_edge(Vertex u, Vertex v) const;
    WeightedGraph add_edge(Vertex u, Vertex v, const Rational& r = Rational(1)) const;

    bool operator==(const WeightedGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    WeightedGraph(std::size_t n, std::vector<Edge> edges, int);
    void index();
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

WeightedGraph build_graph(std::size_t n, std::span<const EdgeSpec> edges);

inline std::size_t degree(const WeightedGraph& g, Vertex v) { return g.degree(v); }
inline bool is_connected(const WeightedGraph& g) { return g.is_connected(); }
inline WeightedGraph delete_edge(const WeightedGraph& g, Vertex u, Vertex v) { return g.delete_edge(u, v); }

/// True for a connected graph with n-1 edges and maximum degree 2.
bool is_path(const WeightedGraph& g);

} // namespace rescurv
