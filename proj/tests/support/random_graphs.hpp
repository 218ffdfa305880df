#pragma once

#include "rescurv/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace testgen {

using rescurv::EdgeSpec;
using rescurv::Rational;
using rescurv::WeightedGraph;

/// Connected graph on n vertices: a random spanning tree plus each remaining
/// pair with probability `density`. Weighted graphs draw r = p/q with
/// 1 <= p <= 4, 1 <= q <= 3.
inline WeightedGraph random_connected(std::size_t n, double density, bool weighted, std::mt19937_64& rng) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::size_t a = order[i], b = order[pick(rng)];
        pairs.emplace(std::min(a, b), std::max(a, b));
    }
    std::bernoulli_distribution extra(density);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!pairs.count({a, b}) && extra(rng)) pairs.emplace(a, b);
    std::uniform_int_distribution<int> num(1, 4), den(1, 3);
    std::vector<EdgeSpec> edges;
    for (const auto& [a, b] : pairs) {
        EdgeSpec e{a, b, std::nullopt};
        if (weighted) e.r = Rational(num(rng), den(rng));
        edges.push_back(std::move(e));
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return WeightedGraph(n, edges);
}

/// Spanning-connected subgraph of g obtained by deleting random non-bridge
/// edges, each attempted with probability `drop`.
inline WeightedGraph random_connected_subgraph(const WeightedGraph& g, double drop, std::mt19937_64& rng) {
    WeightedGraph h = g;
    std::bernoulli_distribution coin(drop);
    std::vector<rescurv::Edge> edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (const auto& e : edges) {
        if (!coin(rng)) continue;
        WeightedGraph candidate = h.delete_edge(e.u, e.v);
        if (candidate.is_connected()) h = std::move(candidate);
    }
    return h;
}

} // namespace testgen
