#pragma once

#include "rescurv/curvature.hpp"
#include "rescurv/graph.hpp"
#include "rescurv/products.hpp"
#include "rescurv/rational.hpp"

#include <map>
#include <vector>

namespace rescurv {

/// Smallest boundary curvature of any grid P_m x P_n with max(m, n) > 3.
inline const Rational kGridBoundaryBound{17, 4830};

/// P_m x P_n. Vertex (i, j), 0 <= i < m, 0 <= j < n, has index i * n + j.
WeightedGraph grid(std::size_t m, std::size_t n);
ProductDescriptor grid_descriptor(std::size_t m, std::size_t n);

/// Curvature at every boundary vertex of P_m x P_n, keyed by vertex index.
template <class T>
std::map<Vertex, T> grid_boundary_curvatures(std::size_t m, std::size_t n);

struct GridTheoremReport {
    std::size_t m = 0;
    std::size_t n = 0;
    bool interior_all_negative = false;
    bool boundary_all_nonnegative = false;
    Rational boundary_min;
    std::vector<Vertex> boundary_argmin;
    Rational interior_max;  // meaningful only when the grid has interior vertices
    /// boundary_min >= 17/4830; vacuously true for the 3x3 grid.
    bool boundary_bound_holds = false;

    bool holds() const { return interior_all_negative && boundary_all_nonnegative && boundary_bound_holds; }
};

inline constexpr std::size_t kDefaultMaxExactGridSide = 12;
inline constexpr std::size_t kDefaultMaxFloatGridSide = 40;

/// Exact check of the grid sign pattern. Requires m, n >= 3 and the exact
/// backend (BackendNotExact otherwise); sides above `max_side` are rejected
/// with SizeLimitExceeded.
GridTheoremReport verify_grid_theorem(std::size_t m, std::size_t n, Backend backend = Backend::exact,
                                      std::size_t max_side = kDefaultMaxExactGridSide);

/// End-rung resistances of the ladders P2 x P_1 .. P2 x P_n:
/// alpha_1 = 1, alpha_{k+1} = (alpha_k + 2) / (alpha_k + 3).
class LadderResistanceTable {
public:
    explicit LadderResistanceTable(std::size_t n);

    std::size_t size() const noexcept { return alpha_.size(); }
    /// alpha_k, 1-based.
    const Rational& alpha(std::size_t k) const;
    const std::vector<Rational>& values() const noexcept { return alpha_; }

private:
    std::vector<Rational> alpha_;
};

LadderResistanceTable ladder_alpha(std::size_t n);

/// Vertex i (x) k of P2 x P_n, i in {0, 1}, k in 1..n.
inline Vertex ladder_vertex(std::size_t i, std::size_t k, std::size_t n) { return i * n + (k - 1); }

/// Effective resistance across the k-th rung of P2 x P_n (1 <= k <= n).
/// End rungs are alpha_n; interior rungs are three resistors in parallel:
/// 1, alpha_{k-1} + 2, alpha_{n-k} + 2.
Rational rung_resistance(std::size_t n, std::size_t k);

/// Effective resistance across the rail between positions k and k+1
/// (1 <= k <= n-1): 1 in parallel with alpha_k + alpha_{n-k} + 1.
Rational rail_resistance(std::size_t n, std::size_t k);

/// Closed-form curvature of P2 x P_n, in ladder_vertex order.
CurvatureVector<Rational> ladder_curvatures(std::size_t n);

struct CentralEdgeRow {
    std::size_t n;
    Vertex u;
    Vertex v;
    double resistance;
};

/// For n = 2..n_max, the resistance across the edge from (h, h) to
/// (h + 1, h) of the n x n grid with h = (n - 1) / 2; for odd n that is an
/// edge at the exact center. Values decrease toward 1/2 by Rayleigh
/// monotonicity since each grid embeds centrally in the next odd one.
std::vector<CentralEdgeRow> central_edge_resistance_sweep(std::size_t n_max, Backend backend = Backend::floating);

} // namespace rescurv
