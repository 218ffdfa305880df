#include "rescurv/bounds.hpp"

#include "rescurv/error.hpp"
#include "rescurv/products.hpp"
#include "rescurv/spectral.hpp"

namespace rescurv {

namespace {

Rational literal_level(const Rational& omega, std::size_t d, std::size_t r) {
    Rational f = omega;
    for (std::size_t k = 1; k <= r; ++k) f = 1 / (1 / omega + Rational(static_cast<long>(d - 1)) / (2 + f));
    return f;
}

} // namespace

Rational tree_bound(const TreeBoundParams& params, TreeRecurrence variant) {
    TreeBoundParams p = params;
    p.omega.canonicalize();
    if (p.omega <= 0) throw Error(ErrorCode::NonpositiveResistance, "tree bound needs omega > 0");
    if (p.d < 2) throw Error(ErrorCode::InvalidArgument, "tree regularity must be >= 2");
    if (p.r == 0) return p.omega;
    if (variant == TreeRecurrence::literal) return literal_level(p.omega, p.d, p.r);
    const Rational below = literal_level(p.omega, p.d, p.r - 1);
    return 1 / (1 / p.omega + Rational(static_cast<long>(p.d)) / (2 + below));
}

template <class T>
T upper_bound_ub(const T& omega_in, std::size_t d) {
    const T omega = canonical(omega_in);
    if (!(omega > 0)) throw Error(ErrorCode::NonpositiveResistance, "upper bound needs omega > 0");
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "upper bound needs d >= 1");
    T two_over = T(2) / omega;
    return T(omega * (1 + two_over) / (T(static_cast<long>(d)) + 1 + two_over));
}

Rational star_upper_bound(const Rational& omega_in, std::span<const Rational> spokes) {
    const Rational omega = canonical(omega_in);
    if (omega <= 0) throw Error(ErrorCode::NonpositiveResistance, "star bound needs omega > 0");
    Rational conductance = 1 / omega;
    for (const auto& r : spokes) conductance += 1 / (omega + 2 * canonical(r));
    return 1 / conductance;
}

template <class T>
T lower_bound_lb(const T& omega_in, const T& lambda2_in, const T& lambdamax_in, std::size_t n2) {
    const T omega = canonical(omega_in), lambda2_1 = canonical(lambda2_in), lambdamax_2 = canonical(lambdamax_in);
    if (!(lambda2_1 > 0)) throw Error(ErrorCode::InvalidArgument, "lower bound needs a connected first factor");
    if (n2 < 1) throw Error(ErrorCode::InvalidArgument, "lower bound needs n2 >= 1");
    if (lambdamax_2 < 0) throw Error(ErrorCode::InvalidArgument, "eigenvalues are non-negative");
    T inv_n = T(1) / T(static_cast<long>(n2));
    return T((inv_n + (1 - inv_n) * lambda2_1 / (lambda2_1 + lambdamax_2)) * omega);
}

template <class T>
std::vector<BoundRow<T>> validate_bounds(const WeightedGraph& g1, const WeightedGraph& g2) {
    if (!g1.is_connected() || !g2.is_connected())
        throw Error(ErrorCode::Disconnected, "bound validation needs connected factors");
    const std::size_t n1 = g1.vertex_count();
    const std::size_t n2 = g2.vertex_count();

    const ResistanceMatrix<T> factor = resistance_matrix<T>(g1);
    const ProductDescriptor pd({g1, g2});
    const ResistanceMatrix<T> full = resistance_matrix(pseudoinverse(product_laplacian<T>(pd)));

    const EigenSystem es1 = eigensystem(laplacian<double>(g1));
    const EigenSystem es2 = eigensystem(laplacian<double>(g2));
    const double lambda2 = n1 > 1 ? es1.values[1] : 0.0;
    const double lambdamax = es2.values.back() < 0 ? 0.0 : es2.values.back();

    std::vector<BoundRow<T>> rows;
    for (const auto& e : g1.edges()) {
        const T omega = factor(e.u, e.v);
        const double lb = lower_bound_lb<double>(to_double(omega), lambda2, lambdamax, n2);
        for (Vertex v2 = 0; v2 < n2; ++v2) {
            std::vector<Rational> spokes;
            for (std::size_t i : g2.incident(v2)) spokes.push_back(g2.edges()[i].r);
            T ub;
            if constexpr (std::is_same_v<T, Rational>) {
                ub = star_upper_bound(omega, spokes);
            } else {
                double c = 1 / omega;
                for (const auto& r : spokes) c += 1 / (omega + 2 * r.get_d());
                ub = 1 / c;
            }
            const Vertex x = e.u * n2 + v2;
            const Vertex y = e.v * n2 + v2;
            const T actual = full(x, y);
            BoundRow<T> row{x, y, e.u, e.v, v2, omega, actual, lb, ub, false, false};
            row.lb_holds = lb <= to_double(actual) + kLowerBoundSlack;
            if constexpr (std::is_same_v<T, Rational>)
                row.ub_holds = actual <= ub;
            else
                row.ub_holds = actual <= ub + kLowerBoundSlack;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

template <class T>
std::string bounds_to_csv(const std::vector<BoundRow<T>>& rows) {
    std::string out = "x,y,v1,w1,v2,actual,lb,ub,slack_lb,slack_ub\n";
    for (const auto& r : rows) {
        const double a = to_double(r.actual);
        out += std::to_string(r.x) + "," + std::to_string(r.y) + "," + std::to_string(r.v1) + "," +
               std::to_string(r.w1) + "," + std::to_string(r.v2) + "," + to_string(r.actual) + "," +
               to_string(r.lb) + "," + to_string(r.ub) + "," + to_string(a - r.lb) + "," +
               to_string(T(r.ub - r.actual)) + "\n";
    }
    return out;
}

template Rational upper_bound_ub<Rational>(const Rational&, std::size_t);
template double upper_bound_ub<double>(const double&, std::size_t);
template Rational lower_bound_lb<Rational>(const Rational&, const Rational&, const Rational&, std::size_t);
template double lower_bound_lb<double>(const double&, const double&, const double&, std::size_t);
template std::vector<BoundRow<Rational>> validate_bounds<Rational>(const WeightedGraph&, const WeightedGraph&);
template std::vector<BoundRow<double>> validate_bounds<double>(const WeightedGraph&, const WeightedGraph&);
template std::string bounds_to_csv<Rational>(const std::vector<BoundRow<Rational>>&);
template std::string bounds_to_csv<double>(const std::vector<BoundRow<double>>&);

} // namespace rescurv
