#include "rescurv/curvature.hpp"
#include "rescurv/error.hpp"
#include "rescurv/generators.hpp"
#include "rescurv/grids_ladders.hpp"

#include <doctest.h>

using namespace rescurv;

TEST_CASE("curvature of K2, P4 and C5") {
    auto k2 = node_curvatures<Rational>(path(2));
    CHECK(k2[0] == Rational(1, 2));
    CHECK(k2[1] == Rational(1, 2));

    auto p4 = node_curvatures<Rational>(path(4));
    CHECK(p4.p == std::vector<Rational>{Rational(1, 2), 0, 0, Rational(1, 2)});
    CHECK(graph_curvature(p4) == 0);

    // omega on C5 adjacent pairs is 1 * 4 / 5; p = 1 - (4/5 + 4/5) / 2
    auto c5 = node_curvatures<Rational>(cycle(5));
    for (std::size_t i = 0; i < 5; ++i) CHECK(c5[i] == Rational(1, 5));
}

TEST_CASE("curvature of complete graphs and stars") {
    for (std::size_t n = 2; n <= 7; ++n) {
        auto p = node_curvatures<Rational>(complete(n));
        for (std::size_t i = 0; i < n; ++i) CHECK(p[i] == Rational(1, static_cast<long>(n)));
    }
    auto s = node_curvatures<Rational>(star(3));
    CHECK(s[0] == Rational(-1, 2));
    for (std::size_t i = 1; i <= 3; ++i) CHECK(s[i] == Rational(1, 2));
    CHECK(graph_curvature(s) == Rational(-1, 2));
}

TEST_CASE("weighted curvature still sums to one") {
    WeightedGraph g(3, {{0, 1, Rational(2)}, {1, 2, Rational(1, 3)}, {0, 2, Rational(5, 4)}});
    CHECK(node_curvatures<Rational>(g).sum() == 1);
    // a single edge of any resistance behaves like K2
    WeightedGraph heavy(2, {{0, 1, Rational(9, 2)}});
    CHECK(node_curvatures<Rational>(heavy)[0] == Rational(1, 2));
}

TEST_CASE("float backend agrees with exact") {
    const WeightedGraph g = grid(4, 5);
    auto e = node_curvatures<Rational>(g);
    auto f = node_curvatures<double>(g);
    for (std::size_t i = 0; i < e.size(); ++i) CHECK(f[i] == doctest::Approx(to_double(e[i])).epsilon(1e-12));
}

TEST_CASE("sign classification") {
    auto p4 = node_curvatures<Rational>(path(4));
    auto signs = sign_classify(p4, 0.0);
    CHECK(signs == std::vector<Sign>{Sign::positive, Sign::zero, Sign::zero, Sign::positive});
    CHECK_THROWS_AS(sign_classify(p4, 1e-9), Error);

    auto f = node_curvatures<double>(path(4));
    CHECK(sign_classify(f, kDefaultSignEpsilon) == signs);

    auto s = node_curvatures<Rational>(star(4));
    CHECK(sign_classify(s, 0.0)[0] == Sign::negative);
    CHECK(to_string(Sign::negative) == "negative");
}

TEST_CASE("dimension mismatch and disconnected inputs") {
    auto om = resistance_matrix<Rational>(path(3));
    try {
        node_curvatures(path(4), om);
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
    CHECK_THROWS_AS(node_curvatures<Rational>(WeightedGraph(3, {{0, 1, {}}})), Error);
}

TEST_CASE("curvature serialization") {
    auto p4 = node_curvatures<Rational>(path(4));
    CHECK(curvatures_to_json(p4) == R"({"0":"1/2","1":"0","2":"0","3":"1/2"})");
    CHECK(curvatures_to_csv(p4).rfind("vertex,curvature\n", 0) == 0);
    CHECK(curvatures_to_csv(p4).find("3,1/2") != std::string::npos);
    auto dot = curvatures_to_dot(path(4), p4);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("1/2") != std::string::npos);

    // twelve keys must stay in numeric order, not lexicographic
    auto big = node_curvatures<Rational>(path(12));
    auto json = curvatures_to_json(big);
    CHECK(json.find("\"2\"") < json.find("\"10\""));
}
