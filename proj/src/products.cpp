#include "rescurv/products.hpp"

#include "rescurv/error.hpp"

#include <algorithm>
#include <numeric>

namespace rescurv {

ProductDescriptor::ProductDescriptor(std::vector<WeightedGraph> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(ErrorCode::InvalidArgument, "a product needs at least one factor");
    for (const auto& f : factors_) total_n_ *= f.vertex_count();
}

std::vector<std::size_t> ProductDescriptor::sizes() const {
    std::vector<std::size_t> s;
    s.reserve(factors_.size());
    for (const auto& f : factors_) s.push_back(f.vertex_count());
    return s;
}

std::size_t ProductDescriptor::index_of(std::span<const std::size_t> coords) const {
    if (coords.size() != factors_.size())
        throw Error(ErrorCode::DimensionMismatch, "coordinate count differs from factor count");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const std::size_t nk = factors_[k].vertex_count();
        if (coords[k] >= nk) throw Error(ErrorCode::IndexOutOfRange, "coordinate out of range");
        idx = idx * nk + coords[k];
    }
    return idx;
}

VertexLabel ProductDescriptor::label_of(std::size_t index) const {
    if (index >= total_n_) throw Error(ErrorCode::IndexOutOfRange, "product vertex out of range");
    VertexLabel label(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        const std::size_t nk = factors_[k].vertex_count();
        label[k] = index % nk;
        index /= nk;
    }
    return label;
}

WeightedGraph ProductDescriptor::graph() const {
    WeightedGraph g = factors_.front();
    for (std::size_t k = 1; k < factors_.size(); ++k) g = cartesian_product(g, factors_[k]);
    return g;
}

WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2) {
    const std::size_t n1 = g1.vertex_count();
    const std::size_t n2 = g2.vertex_count();
    std::vector<EdgeSpec> edges;
    edges.reserve(n1 * g2.edge_count() + n2 * g1.edge_count());
    for (std::size_t i = 0; i < n1; ++i)
        for (const auto& e : g2.edges()) edges.push_back({i * n2 + e.u, i * n2 + e.v, e.r});
    for (const auto& e : g1.edges())
        for (std::size_t j = 0; j < n2; ++j) edges.push_back({e.u * n2 + j, e.v * n2 + j, e.r});
    return WeightedGraph(n1 * n2, edges);
}

template <class T>
Laplacian<T> product_laplacian(const ProductDescriptor& pd) {
    DenseMatrix<T> acc = laplacian<T>(pd.factors().front()).matrix;
    for (std::size_t k = 1; k < pd.dimension(); ++k) {
        DenseMatrix<T> next = laplacian<T>(pd.factors()[k]).matrix;
        acc = kronecker(acc, DenseMatrix<T>::identity(next.rows())) +
              kronecker(DenseMatrix<T>::identity(acc.rows()), next);
    }
    return {std::move(acc)};
}

EigenSystem product_eigensystem(const EigenSystem& es1, const EigenSystem& es2) {
    const std::size_t n1 = es1.size();
    const std::size_t n2 = es2.size();
    const std::size_t n = n1 * n2;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto value = [&](std::size_t k) { return es1.values[k / n2] + es2.values[k % n2]; };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return value(a) < value(b); });

    EigenSystem out;
    out.values.reserve(n);
    out.vectors = DenseMatrix<double>(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t j1 = order[col] / n2;
        const std::size_t j2 = order[col] % n2;
        out.values.push_back(value(order[col]));
        for (std::size_t a = 0; a < n1; ++a)
            for (std::size_t b = 0; b < n2; ++b)
                out.vectors(a * n2 + b, col) = es1.vectors(a, j1) * es2.vectors(b, j2);
    }
    return out;
}

EigenSystem product_eigensystem(const ProductDescriptor& pd) {
    EigenSystem acc = eigensystem(laplacian<double>(pd.factors().front()));
    for (std::size_t k = 1; k < pd.dimension(); ++k)
        acc = product_eigensystem(acc, eigensystem(laplacian<double>(pd.factors()[k])));
    return acc;
}

template <class T>
CurvatureVector<T> node_curvatures_from_laplacian(const Laplacian<T>& l, const ResistanceMatrix<T>& omega) {
    const std::size_t n = l.size();
    if (omega.size() != n) throw Error(ErrorCode::DimensionMismatch, "Laplacian and resistance sizes differ");
    CurvatureVector<T> out;
    out.p.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        T dot = T(0);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && l(i, j) != 0) dot += omega(i, j) * l(i, j);
        out.p.push_back(T(1) + dot / 2);
    }
    return out;
}

template <class T>
CurvatureVector<T> product_node_curvatures(const ProductDescriptor& pd) {
    for (const auto& f : pd.factors())
        if (!f.is_connected()) throw Error(ErrorCode::Disconnected, "product factor is disconnected");
    Laplacian<T> l = product_laplacian<T>(pd);
    ResistanceMatrix<T> omega = resistance_matrix(pseudoinverse(l));
    return node_curvatures_from_laplacian(l, omega);
}

std::string_view to_string(Position p) { return p == Position::boundary ? "boundary" : "interior"; }

std::vector<Position> classify_boundary_interior(const ProductDescriptor& pd) {
    std::vector<std::vector<char>> endpoint;
    for (const auto& f : pd.factors()) {
        if (!is_path(f)) throw Error(ErrorCode::NotAPathProduct, "every factor must be a path");
        std::vector<char> ends(f.vertex_count());
        for (Vertex v = 0; v < f.vertex_count(); ++v) ends[v] = f.degree(v) <= 1;
        endpoint.push_back(std::move(ends));
    }
    std::vector<Position> out(pd.total_n(), Position::interior);
    for (std::size_t i = 0; i < pd.total_n(); ++i) {
        VertexLabel c = pd.label_of(i);
        for (std::size_t k = 0; k < c.size(); ++k)
            if (endpoint[k][c[k]]) {
                out[i] = Position::boundary;
                break;
            }
    }
    return out;
}

#define RESCURV_INSTANTIATE(T)                                                                               \
    template Laplacian<T> product_laplacian<T>(const ProductDescriptor&);                                    \
    template CurvatureVector<T> node_curvatures_from_laplacian<T>(const Laplacian<T>&,                       \
                                                                  const ResistanceMatrix<T>&);               \
    template CurvatureVector<T> product_node_curvatures<T>(const ProductDescriptor&);

RESCURV_INSTANTIATE(Rational)
RESCURV_INSTANTIATE(double)

#undef RESCURV_INSTANTIATE

} // namespace rescurv
