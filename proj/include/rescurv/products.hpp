#pragma once

#include "rescurv/curvature.hpp"
#include "rescurv/graph.hpp"
#include "rescurv/spectral.hpp"

#include <span>
#include <vector>

namespace rescurv {

/// Per-factor coordinates of a product vertex.
using VertexLabel = std::vector<std::size_t>;

/// Ordered factor list of a Cartesian product G1 x ... x Gd.
///
/// Vertex indexing is row-major with the first factor most significant:
/// (v1, ..., vd) -> sum_k v_k * prod_{j>k} n_j. This is the order produced
/// by the Kronecker sum L1 (x) I + I (x) L2, applied left to right, so the
/// combinatorial product and the Kronecker-built Laplacian agree without any
/// permutation.
class ProductDescriptor {
public:
    explicit ProductDescriptor(std::vector<WeightedGraph> factors);

    const std::vector<WeightedGraph>& factors() const noexcept { return factors_; }
    std::size_t dimension() const noexcept { return factors_.size(); }
    std::size_t total_n() const noexcept { return total_n_; }
    std::vector<std::size_t> sizes() const;

    std::size_t index_of(std::span<const std::size_t> coords) const;
    VertexLabel label_of(std::size_t index) const;

    /// The product graph, built by iterated cartesian_product.
    WeightedGraph graph() const;

private:
    std::vector<WeightedGraph> factors_;
    std::size_t total_n_ = 1;
};

/// Edges of g2-copies first (for each vertex of g1), then g1-copies; each
/// product edge inherits its factor edge's resistance.
WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2);

/// Iterated Kronecker sum of the factor Laplacians.
template <class T>
Laplacian<T> product_laplacian(const ProductDescriptor& pd);

/// All n1*n2 pairs (l1 + l2, v1 (x) v2), sorted ascending by eigenvalue
/// (ties keep (j1, j2) enumeration order).
EigenSystem product_eigensystem(const EigenSystem& es1, const EigenSystem& es2);

/// Folds product_eigensystem over the factors' own eigensystems.
EigenSystem product_eigensystem(const ProductDescriptor& pd);

/// p_i = 1 + 1/2 * sum_j omega_ij L_ij, which equals node_curvatures on the
/// graph whose Laplacian is `l`.
template <class T>
CurvatureVector<T> node_curvatures_from_laplacian(const Laplacian<T>& l, const ResistanceMatrix<T>& omega);

/// Curvature of the whole product via product Laplacian, shifted inverse and
/// the resistance matrix. Throws Disconnected if any factor is.
template <class T>
CurvatureVector<T> product_node_curvatures(const ProductDescriptor& pd);

enum class Position { boundary, interior };

std::string_view to_string(Position p);

/// For products of paths: a vertex is boundary iff some coordinate is an
/// endpoint of its factor. Throws NotAPathProduct otherwise.
std::vector<Position> classify_boundary_interior(const ProductDescriptor& pd);

} // namespace rescurv
