#pragma once

#include "rescurv/graph.hpp"
#include "rescurv/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace rescurv {

struct NetworkEdge {
    Vertex u;
    Vertex v;
    Rational r;
};

/// Two-terminal resistor network. Unlike WeightedGraph, parallel edges are
/// allowed; self-loops are not. Vertex indices stay fixed through
/// reductions, eliminated vertices simply lose all their edges.
class TerminalNetwork {
public:
    TerminalNetwork(std::size_t n, std::vector<NetworkEdge> edges, Vertex s, Vertex t);
    static TerminalNetwork from_graph(const WeightedGraph& g, Vertex s, Vertex t);

    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<NetworkEdge>& edges() const noexcept { return edges_; }
    Vertex source() const noexcept { return s_; }
    Vertex sink() const noexcept { return t_; }
    bool is_terminal(Vertex v) const noexcept { return v == s_ || v == t_; }

    /// Edge-end count at v; a bundle of k parallel edges contributes k.
    std::size_t degree(Vertex v) const;
    bool terminals_connected() const;

private:
    friend class NetworkReducer;
    std::size_t n_;
    std::vector<NetworkEdge> edges_;
    Vertex s_;
    Vertex t_;
};

/// Eliminates every non-terminal vertex with exactly two edge ends, summing
/// the two resistances. A degree-2 vertex whose both edges lead to the same
/// neighbor is a dead loop and is removed.
TerminalNetwork series_reduce(const TerminalNetwork& net);

/// Replaces every bundle of parallel edges by one edge whose conductance is
/// the bundle's total conductance.
TerminalNetwork parallel_reduce(const TerminalNetwork& net);

/// Removes components that do not contain the terminals and non-terminal
/// vertices of degree one (no current can flow through either).
TerminalNetwork prune_dead_branches(const TerminalNetwork& net);

/// Applies pruning and the series and parallel laws to a fixpoint. Returns
/// the terminal resistance when the network collapses to a single s-t edge,
/// std::nullopt (irreducible) otherwise. No star-mesh transforms are used.
/// Throws DisconnectedTerminals.
std::optional<Rational> reduce_to_resistance(const TerminalNetwork& net);

/// Same fixpoint reached by applying one elementary reduction at a time,
/// chosen uniformly among those available. Used to exercise confluence.
std::optional<Rational> reduce_to_resistance_randomized(const TerminalNetwork& net, std::uint64_t seed);

/// Random two-terminal series-parallel network with exactly `edges` edges,
/// built top-down by recursive series/parallel composition. Resistances are
/// p/q with 1 <= p <= 5, 1 <= q <= 4. Terminals are vertices 0 and 1.
TerminalNetwork random_series_parallel(std::size_t edges, std::mt19937_64& rng);

/// Simple graph with the same Laplacian: parallel bundles merged into one
/// edge carrying their summed conductance.
WeightedGraph to_weighted_graph(const TerminalNetwork& net);

struct MonteCarloEstimate {
    double estimate = 0;
    double standard_error = 0;
    std::uint64_t walks = 0;
    double mean_commute_time = 0;
};

/// Commute-time estimator for unit-resistance graphs: omega(u, v) is the
/// expected u -> v -> u walk length divided by 2|E|. Walk i draws from its
/// own stream seeded from (seed, i), and the per-walk lengths are summed in
/// integers, so the result does not depend on `threads`.
MonteCarloEstimate mc_effective_resistance(const WeightedGraph& g, Vertex u, Vertex v, std::uint64_t walks,
                                           std::uint64_t seed, unsigned threads = 1);

} // namespace rescurv
