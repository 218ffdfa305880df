#include "rescurv/error.hpp"
#include "rescurv/generators.hpp"
#include "rescurv/grids_ladders.hpp"
#include "rescurv/resistance_laws.hpp"
#include "rescurv/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace rescurv;

TEST_CASE("series law") {
    TerminalNetwork net(3, {{0, 2, Rational(1, 2)}, {2, 1, Rational(1, 3)}}, 0, 1);
    auto reduced = series_reduce(net);
    REQUIRE(reduced.edges().size() == 1);
    CHECK(reduced.edges()[0].r == Rational(5, 6));
    CHECK(reduce_to_resistance(net) == Rational(5, 6));
    CHECK(reduce_to_resistance(TerminalNetwork::from_graph(path(6), 0, 5)) == 5);
}

TEST_CASE("parallel law") {
    TerminalNetwork net(2, {{0, 1, Rational(1)}, {1, 0, Rational(1)}}, 0, 1);
    auto reduced = parallel_reduce(net);
    REQUIRE(reduced.edges().size() == 1);
    CHECK(reduced.edges()[0].r == Rational(1, 2));
    TerminalNetwork three(2, {{0, 1, Rational(2)}, {0, 1, Rational(3)}, {0, 1, Rational(6)}}, 0, 1);
    CHECK(reduce_to_resistance(three) == 1);
}

TEST_CASE("cycles reduce by series then parallel") {
    for (std::size_t n = 3; n <= 9; ++n)
        for (Vertex t = 1; t < n; ++t) {
            auto r = reduce_to_resistance(TerminalNetwork::from_graph(cycle(n), 0, t));
            REQUIRE(r.has_value());
            CHECK(*r == canonical(Rational(static_cast<long>(t * (n - t)), static_cast<long>(n))));
        }
}

TEST_CASE("dead branches are pruned") {
    // P3 terminals 0,1 with a pendant vertex on 1 and a detached edge.
    TerminalNetwork net(5, {{0, 1, Rational(2)}, {1, 2, Rational(7)}, {3, 4, Rational(1)}}, 0, 1);
    auto pruned = prune_dead_branches(net);
    CHECK(pruned.edges().size() == 1);
    CHECK(reduce_to_resistance(net) == 2);
    // star: terminals are two leaves, the third leaf dangles
    CHECK(reduce_to_resistance(TerminalNetwork::from_graph(star(3), 1, 2)) == 2);
}

TEST_CASE("K4 and the Wheatstone bridge are irreducible") {
    CHECK_FALSE(reduce_to_resistance(TerminalNetwork::from_graph(complete(4), 0, 1)).has_value());
    WeightedGraph bridge = complete(4).delete_edge(0, 1);
    CHECK_FALSE(reduce_to_resistance(TerminalNetwork::from_graph(bridge, 0, 1)).has_value());
    CHECK_FALSE(reduce_to_resistance(TerminalNetwork::from_graph(grid(3, 3), 0, 8)).has_value());
}

TEST_CASE("network validation") {
    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ParseError;
    };
    CHECK(code([] { TerminalNetwork(2, {{0, 0, Rational(1)}}, 0, 1); }) == ErrorCode::SelfLoop);
    CHECK(code([] { TerminalNetwork(2, {{0, 1, Rational(0)}}, 0, 1); }) == ErrorCode::NonpositiveResistance);
    CHECK(code([] { TerminalNetwork(2, {{0, 1, Rational(1)}}, 0, 2); }) == ErrorCode::IndexOutOfRange);
    CHECK(code([] { TerminalNetwork(2, {{0, 1, Rational(1)}}, 1, 1); }) == ErrorCode::InvalidArgument);
    CHECK(code([] { reduce_to_resistance(TerminalNetwork(3, {{0, 2, Rational(1)}}, 0, 1)); }) ==
          ErrorCode::DisconnectedTerminals);
}

TEST_CASE("random series-parallel networks reduce to the spectral value") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t edges = 1 + static_cast<std::size_t>(trial) % 20;
        TerminalNetwork net = random_series_parallel(edges, rng);
        CHECK(net.edges().size() == edges);
        auto r = reduce_to_resistance(net);
        REQUIRE(r.has_value());
        WeightedGraph g = to_weighted_graph(net);
        CHECK(*r == effective_resistance<Rational>(g, net.source(), net.sink()));
        for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(reduce_to_resistance_randomized(net, seed) == r);
    }
}

TEST_CASE("to_weighted_graph merges parallel bundles") {
    TerminalNetwork net(3, {{0, 1, Rational(1)}, {1, 0, Rational(1)}, {1, 2, Rational(3)}}, 0, 2);
    WeightedGraph g = to_weighted_graph(net);
    CHECK(g.edge_count() == 2);
    CHECK(effective_resistance<Rational>(g, 0, 2) == Rational(7, 2));
}

TEST_CASE("Monte Carlo on K2 is exact") {
    // every commute on K2 takes exactly two steps
    auto est = mc_effective_resistance(path(2), 0, 1, 1000, 7);
    CHECK(est.estimate == 1.0);
    CHECK(est.standard_error == 0.0);
    CHECK(est.mean_commute_time == 2.0);
    CHECK(est.walks == 1000);
}

TEST_CASE("Monte Carlo is seed-deterministic and thread-independent") {
    const WeightedGraph g = grid(3, 3);
    auto a = mc_effective_resistance(g, 0, 8, 20000, 123, 1);
    auto b = mc_effective_resistance(g, 0, 8, 20000, 123, 4);
    auto c = mc_effective_resistance(g, 0, 8, 20000, 123, 3);
    CHECK(a.estimate == b.estimate);
    CHECK(a.estimate == c.estimate);
    CHECK(a.standard_error == b.standard_error);
    auto d = mc_effective_resistance(g, 0, 8, 20000, 124, 1);
    CHECK(a.estimate != d.estimate);
    double exact = to_double(effective_resistance<Rational>(g, 0, 8));
    CHECK(std::abs(a.estimate - exact) < 5 * a.standard_error);
}

TEST_CASE("Monte Carlo argument checks") {
    WeightedGraph weighted(2, {{0, 1, Rational(2)}});
    CHECK_THROWS_AS(mc_effective_resistance(weighted, 0, 1, 10, 1), Error);
    CHECK(mc_effective_resistance(path(3), 1, 1, 10, 1).estimate == 0.0);
    CHECK_THROWS_AS(mc_effective_resistance(path(3), 0, 3, 10, 1), Error);
    CHECK_THROWS_AS(mc_effective_resistance(WeightedGraph(3, {{0, 1, {}}}), 0, 2, 10, 1), Error);
    CHECK_THROWS_AS(mc_effective_resistance(path(3), 0, 2, 0, 1), Error);
}
