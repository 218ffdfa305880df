#include "rescurv/grids_ladders.hpp"

#include "rescurv/error.hpp"
#include "rescurv/generators.hpp"
#include "rescurv/spectral.hpp"

#include <algorithm>

namespace rescurv {

WeightedGraph grid(std::size_t m, std::size_t n) { return grid_descriptor(m, n).graph(); }

ProductDescriptor grid_descriptor(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "grid sides must be >= 1");
    return ProductDescriptor({path(m), path(n)});
}

template <class T>
std::map<Vertex, T> grid_boundary_curvatures(std::size_t m, std::size_t n) {
    if (m < 2 || n < 2) throw Error(ErrorCode::InvalidArgument, "grid_boundary_curvatures needs m, n >= 2");
    const ProductDescriptor pd = grid_descriptor(m, n);
    const WeightedGraph g = pd.graph();
    const CurvatureVector<T> p = node_curvatures<T>(g);
    const std::vector<Position> where = classify_boundary_interior(pd);
    std::map<Vertex, T> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (where[v] == Position::boundary) out.emplace(v, p[v]);
    return out;
}

GridTheoremReport verify_grid_theorem(std::size_t m, std::size_t n, Backend backend, std::size_t max_side) {
    if (backend != Backend::exact) throw Error(ErrorCode::BackendNotExact, "grid theorem verification is exact-only");
    if (m < 3 || n < 3) throw Error(ErrorCode::InvalidArgument, "grid theorem needs m, n >= 3");
    if (m > max_side || n > max_side)
        throw Error(ErrorCode::SizeLimitExceeded,
                    "grid side exceeds the exact limit of " + std::to_string(max_side));

    const ProductDescriptor pd = grid_descriptor(m, n);
    const WeightedGraph g = pd.graph();
    const CurvatureVector<Rational> p = node_curvatures<Rational>(g);
    const std::vector<Position> where = classify_boundary_interior(pd);

    GridTheoremReport r;
    r.m = m;
    r.n = n;
    r.interior_all_negative = true;
    r.boundary_all_nonnegative = true;
    bool have_boundary = false;
    bool have_interior = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const Rational& x = p[v];
        if (where[v] == Position::interior) {
            if (x >= 0) r.interior_all_negative = false;
            if (!have_interior || x > r.interior_max) r.interior_max = x;
            have_interior = true;
            continue;
        }
        if (x < 0) r.boundary_all_nonnegative = false;
        if (!have_boundary || x < r.boundary_min) {
            r.boundary_min = x;
            r.boundary_argmin.clear();
        }
        if (!have_boundary || x == r.boundary_min) r.boundary_argmin.push_back(v);
        have_boundary = true;
    }
    r.boundary_bound_holds = std::max(m, n) > 3 ? r.boundary_min >= kGridBoundaryBound : true;
    return r;
}

LadderResistanceTable::LadderResistanceTable(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "ladder length must be >= 1");
    alpha_.reserve(n);
    alpha_.emplace_back(1);
    for (std::size_t k = 1; k < n; ++k) {
        const Rational& a = alpha_.back();
        Rational next = (a + 2) / (a + 3);
        alpha_.push_back(std::move(next));
    }
}

const Rational& LadderResistanceTable::alpha(std::size_t k) const {
    if (k < 1 || k > alpha_.size()) throw Error(ErrorCode::IndexOutOfRange, "alpha index " + std::to_string(k));
    return alpha_[k - 1];
}

LadderResistanceTable ladder_alpha(std::size_t n) { return LadderResistanceTable(n); }

Rational rung_resistance(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1 || k > n) throw Error(ErrorCode::IndexOutOfRange, "rung index out of range");
    const LadderResistanceTable t(n);
    if (k == 1 || k == n) return t.alpha(n);
    Rational conductance = 1 + 1 / (t.alpha(k - 1) + 2) + 1 / (t.alpha(n - k) + 2);
    return 1 / conductance;
}

Rational rail_resistance(std::size_t n, std::size_t k) {
    if (n < 2 || k < 1 || k > n - 1) throw Error(ErrorCode::IndexOutOfRange, "rail index out of range");
    const LadderResistanceTable t(n);
    if (k == 1 || k == n - 1) return t.alpha(n);
    Rational conductance = 1 + 1 / (t.alpha(k) + t.alpha(n - k) + 1);
    return 1 / conductance;
}

CurvatureVector<Rational> ladder_curvatures(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "ladder length must be >= 1");
    CurvatureVector<Rational> out;
    out.p.assign(2 * n, Rational(0));
    if (n == 1) {
        out.p = {Rational(1, 2), Rational(1, 2)};
        return out;
    }
    const LadderResistanceTable t(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational value;
        if (k == 1 || k == n) {
            value = 1 - t.alpha(n);
        } else {
            const Rational& a = t.alpha(k - 1);
            const Rational& b = t.alpha(n - k);
            value = Rational(-1, 2) * ((a + 1) * (b + 1) - 3) / ((a + 3) * (b + 3) - 1);
        }
        out.p[ladder_vertex(0, k, n)] = value;
        out.p[ladder_vertex(1, k, n)] = value;
    }
    return out;
}

std::vector<CentralEdgeRow> central_edge_resistance_sweep(std::size_t n_max, Backend backend) {
    std::vector<CentralEdgeRow> rows;
    for (std::size_t n = 2; n <= n_max; ++n) {
        const std::size_t h = (n - 1) / 2;
        const Vertex u = h * n + h;
        const Vertex v = (h + 1) * n + h;
        const WeightedGraph g = grid(n, n);
        const double w = backend == Backend::exact ? to_double(effective_resistance<Rational>(g, u, v))
                                                   : effective_resistance<double>(g, u, v);
        rows.push_back({n, u, v, w});
    }
    return rows;
}

template std::map<Vertex, Rational> grid_boundary_curvatures<Rational>(std::size_t, std::size_t);
template std::map<Vertex, double> grid_boundary_curvatures<double>(std::size_t, std::size_t);

} // namespace rescurv
