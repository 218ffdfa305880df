#include "rescurv/curvature.hpp"

#include "rescurv/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace rescurv {

std::string_view to_string(Sign s) {
    switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
    }
    return "?";
}

template <class T>
T CurvatureVector<T>::sum() const {
    T s = T(0);
    for (const T& x : p) s += x;
    return s;
}

template <class T>
CurvatureVector<T> node_curvatures(const WeightedGraph& g, const ResistanceMatrix<T>& omega) {
    const std::size_t n = g.vertex_count();
    if (omega.size() != n)
        throw Error(ErrorCode::DimensionMismatch,
                    "resistance matrix is " + std::to_string(omega.size()) + "x" + std::to_string(omega.size()) +
                        " but graph has " + std::to_string(n) + " vertices");
    std::vector<T> half_sum(n, T(0));
    for (const auto& e : g.edges()) {
        T w = omega(e.u, e.v);
        if (e.r != 1) w /= from_rational<T>(e.r);
        half_sum[e.u] += w;
        half_sum[e.v] += w;
    }
    CurvatureVector<T> out;
    out.p.reserve(n);
    for (std::size_t x = 0; x < n; ++x) out.p.push_back(T(1) - half_sum[x] / 2);
    return out;
}

template <class T>
T graph_curvature(const CurvatureVector<T>& p) {
    if (p.p.empty()) throw Error(ErrorCode::InvalidArgument, "empty curvature vector");
    return *std::min_element(p.p.begin(), p.p.end());
}

template <class T>
std::vector<Sign> sign_classify(const CurvatureVector<T>& p, double epsilon) {
    if (epsilon < 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be non-negative");
    if constexpr (std::is_same_v<T, Rational>) {
        if (epsilon != 0) throw Error(ErrorCode::InvalidArgument, "exact sign classification takes epsilon = 0");
    }
    std::vector<Sign> out;
    out.reserve(p.size());
    for (const T& x : p.p) {
        if constexpr (std::is_same_v<T, Rational>) {
            int s = sgn(x);
            out.push_back(s < 0 ? Sign::negative : s > 0 ? Sign::positive : Sign::zero);
        } else {
            out.push_back(std::abs(x) <= epsilon ? Sign::zero : x < 0 ? Sign::negative : Sign::positive);
        }
    }
    return out;
}

namespace {

template <class T>
nlohmann::json value_json(const T& x) {
    if constexpr (std::is_same_v<T, Rational>)
        return to_string(x);
    else
        return x;
}

} // namespace

template <class T>
std::string curvatures_to_json(const CurvatureVector<T>& p) {
    // Keys are vertex indices; emit in numeric order rather than the
    // lexicographic order an ordered json object would impose.
    std::string out = "{";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += "\"" + std::to_string(i) + "\":" + value_json(p[i]).dump();
    }
    out += "}";
    return out;
}

template <class T>
std::string curvatures_to_csv(const CurvatureVector<T>& p) {
    std::string out = "vertex,curvature\n";
    for (std::size_t i = 0; i < p.size(); ++i) out += std::to_string(i) + "," + to_string(p[i]) + "\n";
    return out;
}

template <class T>
std::string curvatures_to_dot(const WeightedGraph& g, const CurvatureVector<T>& p) {
    std::string out = "graph G {\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += "  " + std::to_string(i) + " [label=\"" + std::to_string(i) + ": " + to_string(p[i]) + "\"];\n";
    for (const auto& e : g.edges()) {
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
        if (e.r != 1) out += " [label=\"" + to_string(e.r) + "\"]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

#define RESCURV_INSTANTIATE(T)                                                                       \
    template struct CurvatureVector<T>;                                                              \
    template CurvatureVector<T> node_curvatures<T>(const WeightedGraph&, const ResistanceMatrix<T>&); \
    template T graph_curvature<T>(const CurvatureVector<T>&);                                        \
    template std::vector<Sign> sign_classify<T>(const CurvatureVector<T>&, double);                  \
    template std::string curvatures_to_json<T>(const CurvatureVector<T>&);                           \
    template std::string curvatures_to_csv<T>(const CurvatureVector<T>&);                            \
    template std::string curvatures_to_dot<T>(const WeightedGraph&, const CurvatureVector<T>&);

RESCURV_INSTANTIATE(Rational)
RESCURV_INSTANTIATE(double)

#undef RESCURV_INSTANTIATE

} // namespace rescurv
