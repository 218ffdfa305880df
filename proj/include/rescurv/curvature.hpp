#pragma once

#include "rescurv/graph.hpp"
#include "rescurv/spectral.hpp"

#include <string>
#include <vector>

namespace rescurv {

template <class T>
struct CurvatureVector {
    std::vector<T> p;

    std::size_t size() const { return p.size(); }
    const T& operator[](std::size_t i) const { return p[i]; }
    T sum() const;
};

enum class Sign { negative, zero, positive };

std::string_view to_string(Sign s);

/// p_x = 1 - 1/2 * sum over edges xy of omega_xy / r_xy. For unit
/// resistances this is the plain sum of incident effective resistances;
/// the conductance weighting keeps sum(p) = 1 on weighted graphs.
template <class T>
CurvatureVector<T> node_curvatures(const WeightedGraph& g, const ResistanceMatrix<T>& omega);

template <class T>
CurvatureVector<T> node_curvatures(const WeightedGraph& g) {
    return node_curvatures(g, resistance_matrix<T>(g));
}

/// Least entry of p.
template <class T>
T graph_curvature(const CurvatureVector<T>& p);

/// |p_x| <= epsilon maps to zero. The exact backend only accepts epsilon = 0.
template <class T>
std::vector<Sign> sign_classify(const CurvatureVector<T>& p, double epsilon);

inline constexpr double kDefaultSignEpsilon = 1e-9;

/// {"0": value, "1": value, ...}; exact values as rational strings.
template <class T>
std::string curvatures_to_json(const CurvatureVector<T>& p);

/// "vertex,curvature" rows with a header line.
template <class T>
std::string curvatures_to_csv(const CurvatureVector<T>& p);

/// Graphviz rendering with vertex labels "index: p".
template <class T>
std::string curvatures_to_dot(const WeightedGraph& g, const CurvatureVector<T>& p);

} // namespace rescurv
