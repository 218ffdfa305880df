#pragma once

#include "rescurv/dense_matrix.hpp"
#include "rescurv/graph.hpp"
#include "rescurv/rational.hpp"

#include <string>
#include <vector>

namespace rescurv {

/// L = D - A with conductances 1/r on the off-diagonals.
template <class T>
struct Laplacian {
    DenseMatrix<T> matrix;
    std::size_t size() const { return matrix.rows(); }
    const T& operator()(std::size_t i, std::size_t j) const { return matrix(i, j); }
};

/// Moore-Penrose pseudoinverse L+ of a connected graph's Laplacian.
template <class T>
struct Pseudoinverse {
    DenseMatrix<T> matrix;
    std::size_t size() const { return matrix.rows(); }
    const T& operator()(std::size_t i, std::size_t j) const { return matrix(i, j); }
};

/// Pairwise effective resistances; zero diagonal, symmetric.
template <class T>
struct ResistanceMatrix {
    DenseMatrix<T> matrix;
    std::size_t size() const { return matrix.rows(); }
    const T& operator()(std::size_t i, std::size_t j) const { return matrix(i, j); }
};

/// Orthonormal eigenpairs of a symmetric matrix, eigenvalues ascending.
/// Column j of `vectors` pairs with values[j].
struct EigenSystem {
    std::vector<double> values;
    DenseMatrix<double> vectors;
    std::size_t size() const { return values.size(); }
};

template <class T>
Laplacian<T> laplacian(const WeightedGraph& g);

/// A^{-1} B. Exact backend: fraction-free Gauss-Jordan over the integers
/// after clearing denominators. Float backend: LU with partial pivoting.
/// Throws InvalidArgument if A is singular.
template <class T>
DenseMatrix<T> solve(const DenseMatrix<T>& a, const DenseMatrix<T>& b);

template <class T>
DenseMatrix<T> inverse(const DenseMatrix<T>& a) {
    return solve(a, DenseMatrix<T>::identity(a.rows()));
}

/// L+ = (L + J/n)^{-1} - J/n. Throws Disconnected when the kernel of L is
/// larger than span(1).
template <class T>
Pseudoinverse<T> pseudoinverse(const Laplacian<T>& l);

/// Sum over nonzero eigenvalues of v v^T / lambda. Used as the independent
/// route against the shifted inverse.
Pseudoinverse<double> pseudoinverse_spectral(const Laplacian<double>& l, double zero_tol = 1e-9);

/// Float only. Throws ConvergenceFailure if the symmetric solver fails.
EigenSystem eigensystem(const Laplacian<double>& l);
EigenSystem eigensystem(const Laplacian<Rational>& l);

template <class T>
ResistanceMatrix<T> resistance_matrix(const Pseudoinverse<T>& lp);

template <class T>
ResistanceMatrix<T> resistance_matrix(const WeightedGraph& g) {
    return resistance_matrix(pseudoinverse(laplacian<T>(g)));
}

/// Single pair via one linear solve against (L + J/n).
template <class T>
T effective_resistance(const WeightedGraph& g, Vertex u, Vertex v);

/// True when the off-diagonal support of `m` forms one connected component.
template <class T>
bool support_connected(const DenseMatrix<T>& m);

/// Row-major CSV; exact entries are written as "p/q".
template <class T>
std::string matrix_to_csv(const DenseMatrix<T>& m);

} // namespace rescurv
