#pragma once

#include "rescurv/graph.hpp"
#include "rescurv/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rescurv {

struct TreeBoundParams {
    Rational omega;     // resistance of the factor edge, > 0
    std::size_t d = 2;  // tree regularity, >= 2
    std::size_t r = 0;  // tree depth
};

/// How the root level of the tree recurrence branches.
///  literal:     f(k)^{-1} = 1/omega + (d-1) / (2 + f(k-1)) at every level.
///  root_degree: the root uses d branches and deeper levels d-1. At depth 1
///               this reproduces the closed-form upper bound.
enum class TreeRecurrence { literal, root_degree };

/// f(r) with f(0) = omega.
Rational tree_bound(const TreeBoundParams& params, TreeRecurrence variant = TreeRecurrence::root_degree);

/// omega * (1 + 2/omega) / (d + 1 + 2/omega): resistance across an edge of
/// resistance omega multiplied by a d-leaf star.
template <class T>
T upper_bound_ub(const T& omega, std::size_t d);

/// Star bound with arbitrary spoke resistances: omega in parallel with
/// omega + 2 r_i for every spoke i. Equals upper_bound_ub for unit spokes.
Rational star_upper_bound(const Rational& omega, std::span<const Rational> spokes);

/// (1/n2 + (1 - 1/n2) * l2 / (l2 + lmax)) * omega, where l2 is the
/// algebraic connectivity of factor 1 and lmax the largest Laplacian
/// eigenvalue of factor 2.
template <class T>
T lower_bound_lb(const T& omega, const T& lambda2_1, const T& lambdamax_2, std::size_t n2);

template <class T>
struct BoundRow {
    Vertex x;          // product endpoints (row-major index)
    Vertex y;
    Vertex v1;         // factor-1 edge
    Vertex w1;
    Vertex v2;         // fixed factor-2 vertex
    T factor_omega;    // resistance of (v1, w1) within factor 1
    T actual;
    double lb;         // eigenvalue-based, always floating point
    T ub;              // star bound with d = deg(v2)
    bool lb_holds;
    bool ub_holds;
};

/// Absolute slack allowed when comparing the floating lower bound to an
/// exact or floating actual value.
inline constexpr double kLowerBoundSlack = 1e-12;

/// Checks lb <= actual <= ub on every product edge that runs along factor 1.
/// The upper bound uses the star at v2 (always a subgraph). Throws
/// Disconnected.
template <class T>
std::vector<BoundRow<T>> validate_bounds(const WeightedGraph& g1, const WeightedGraph& g2);

/// "x,y,v1,w1,v2,actual,lb,ub,slack_lb,slack_ub" rows.
template <class T>
std::string bounds_to_csv(const std::vector<BoundRow<T>>& rows);

} // namespace rescurv
