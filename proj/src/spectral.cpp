#include "rescurv/spectral.hpp"

#include "rescurv/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>

namespace rescurv {

namespace {

using RowMajorXd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajorXd> as_eigen(const DenseMatrix<double>& m) {
    return Eigen::Map<const RowMajorXd>(m.data(), static_cast<Eigen::Index>(m.rows()),
                                        static_cast<Eigen::Index>(m.cols()));
}

DenseMatrix<double> from_eigen(const Eigen::MatrixXd& e) {
    DenseMatrix<double> m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
    return m;
}

template <class T>
void require_square(const DenseMatrix<T>& m, const char* what) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " must be square");
}

// Clears denominators: returns (scale, integer matrix scale * a).
std::pair<mpz_class, std::vector<mpz_class>> to_integer(const DenseMatrix<Rational>& a) {
    mpz_class scale = 1;
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a.data()[i].get_den_mpz_t());
    std::vector<mpz_class> out(a.rows() * a.cols());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.data()[i].get_num() * (scale / a.data()[i].get_den());
    return {scale, out};
}

} // namespace

template <class T>
bool support_connected(const DenseMatrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < n; ++y)
            if (y != x && !seen[y] && m(x, y) != 0) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == n;
}

template <class T>
Laplacian<T> laplacian(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    DenseMatrix<T> l(n, n);
    for (const auto& e : g.edges()) {
        T c = from_rational<T>(Rational(1 / e.r));
        l(e.u, e.v) -= c;
        l(e.v, e.u) -= c;
        l(e.u, e.u) += c;
        l(e.v, e.v) += c;
    }
    return {std::move(l)};
}

// Fraction-free Gauss-Jordan on [M | B] with M = scale * A integral. After
// step k every processed diagonal entry equals the k-th leading pivot and all
// divisions by the previous pivot are exact, so entries stay integral. At
// the end the left block is p*I and the right block is p * M^{-1} B.
template <>
DenseMatrix<Rational> solve(const DenseMatrix<Rational>& a, const DenseMatrix<Rational>& b) {
    require_square(a, "system matrix");
    if (b.rows() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side row count");
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    auto [scale, left] = to_integer(a);
    auto [bscale, right] = to_integer(b);

    auto L = [&, &left = left](std::size_t i, std::size_t j) -> mpz_class& { return left[i * n + j]; };
    auto R = [&, &right = right](std::size_t i, std::size_t j) -> mpz_class& { return right[i * m + j]; };

    mpz_class prev = 1;
    mpz_class t1, t2;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && L(p, k) == 0) ++p;
        if (p == n) throw Error(ErrorCode::InvalidArgument, "singular matrix");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(L(p, j), L(k, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(R(p, j), R(k, j));
        }
        const mpz_class& pivot = L(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const mpz_class factor = L(i, k);
            // Columns j < k of row k are zero, so row i's left block only
            // changes on its own diagonal and on columns beyond k.
            if (i < k) L(i, i) = pivot;
            for (std::size_t j = k + 1; j < n; ++j) {
                t1 = pivot * L(i, j);
                t2 = factor * L(k, j);
                t1 -= t2;
                mpz_divexact(L(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            for (std::size_t j = 0; j < m; ++j) {
                t1 = pivot * R(i, j);
                t2 = factor * R(k, j);
                t1 -= t2;
                mpz_divexact(R(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            L(i, k) = 0;
        }
        prev = pivot;
    }
    // x = A^{-1} B = scale * M^{-1} (B' / bscale) = scale * R / (prev * bscale)
    DenseMatrix<Rational> x(n, m);
    mpz_class den = prev * bscale;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rational q(R(i, j) * scale, den);
            q.canonicalize();
            x(i, j) = std::move(q);
        }
    return x;
}

template <>
DenseMatrix<double> solve(const DenseMatrix<double>& a, const DenseMatrix<double>& b) {
    require_square(a, "system matrix");
    if (b.rows() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side row count");
    Eigen::MatrixXd ea = as_eigen(a);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(ea);
    if (!lu.isInvertible()) throw Error(ErrorCode::InvalidArgument, "singular matrix");
    Eigen::MatrixXd x = lu.solve(Eigen::MatrixXd(as_eigen(b)));
    return from_eigen(x);
}

namespace {

template <class T>
DenseMatrix<T> shifted(const Laplacian<T>& l) {
    const std::size_t n = l.size();
    if (!support_connected(l.matrix))
        throw Error(ErrorCode::Disconnected, "Laplacian of a disconnected graph has no shifted inverse");
    T shift = T(1) / T(static_cast<long>(n));
    DenseMatrix<T> s = l.matrix;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) += shift;
    return s;
}

DenseMatrix<double> spd_inverse(const DenseMatrix<double>& s) {
    Eigen::MatrixXd es = as_eigen(s);
    Eigen::LLT<Eigen::MatrixXd> llt(es);
    if (llt.info() == Eigen::Success) {
        Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(es.rows(), es.cols()));
        return from_eigen(inv);
    }
    return solve(s, DenseMatrix<double>::identity(s.rows()));
}

} // namespace

template <class T>
Pseudoinverse<T> pseudoinverse(const Laplacian<T>& l) {
    require_square(l.matrix, "Laplacian");
    const std::size_t n = l.size();
    DenseMatrix<T> s = shifted(l);
    DenseMatrix<T> inv;
    if constexpr (std::is_same_v<T, double>)
        inv = spd_inverse(s);
    else
        inv = inverse(s);
    T shift = T(1) / T(static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) -= shift;
    if constexpr (std::is_same_v<T, double>) {
        // LLT leaves rounding asymmetry; symmetrize so downstream consumers
        // see an exactly symmetric matrix.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double avg = 0.5 * (inv(i, j) + inv(j, i));
                inv(i, j) = avg;
                inv(j, i) = avg;
            }
    }
    return {std::move(inv)};
}

EigenSystem eigensystem(const Laplacian<double>& l) {
    require_square(l.matrix, "Laplacian");
    Eigen::MatrixXd el = as_eigen(l.matrix);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(el);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::ConvergenceFailure, "symmetric eigensolver did not converge");
    EigenSystem es;
    const auto& vals = solver.eigenvalues();
    es.values.assign(vals.data(), vals.data() + vals.size());
    es.vectors = from_eigen(solver.eigenvectors());
    return es;
}

EigenSystem eigensystem(const Laplacian<Rational>& l) {
    return eigensystem(Laplacian<double>{l.matrix.map<double>([](const Rational& q) { return q.get_d(); })});
}

Pseudoinverse<double> pseudoinverse_spectral(const Laplacian<double>& l, double zero_tol) {
    if (!support_connected(l.matrix))
        throw Error(ErrorCode::Disconnected, "Laplacian of a disconnected graph");
    EigenSystem es = eigensystem(l);
    const std::size_t n = es.size();
    DenseMatrix<double> p(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(es.values[k]) <= zero_tol) continue;
        const double inv = 1.0 / es.values[k];
        for (std::size_t i = 0; i < n; ++i) {
            const double vi = es.vectors(i, k) * inv;
            for (std::size_t j = 0; j < n; ++j) p(i, j) += vi * es.vectors(j, k);
        }
    }
    return {std::move(p)};
}

template <class T>
ResistanceMatrix<T> resistance_matrix(const Pseudoinverse<T>& lp) {
    const std::size_t n = lp.size();
    DenseMatrix<T> w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            T x = lp(i, i) + lp(j, j) - 2 * lp(i, j);
            w(i, j) = x;
            w(j, i) = std::move(x);
        }
    return {std::move(w)};
}

template <class T>
T effective_resistance(const WeightedGraph& g, Vertex u, Vertex v) {
    const std::size_t n = g.vertex_count();
    if (u >= n || v >= n) throw Error(ErrorCode::IndexOutOfRange, "vertex pair out of range");
    if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "effective resistance needs a connected graph");
    if (u == v) return T(0);
    DenseMatrix<T> s = shifted(laplacian<T>(g));
    DenseMatrix<T> rhs(n, 1);
    rhs(u, 0) = T(1);
    rhs(v, 0) = T(-1);
    // (L + J/n) x = e_u - e_v has x = L+ (e_u - e_v) because e_u - e_v is
    // orthogonal to the all-ones vector.
    DenseMatrix<T> x = solve(s, rhs);
    return T(x(u, 0) - x(v, 0));
}

template <class T>
std::string matrix_to_csv(const DenseMatrix<T>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

#define RESCURV_INSTANTIATE(T)                                                   \
    template bool support_connected<T>(const DenseMatrix<T>&);                   \
    template Laplacian<T> laplacian<T>(const WeightedGraph&);                    \
    template Pseudoinverse<T> pseudoinverse<T>(const Laplacian<T>&);             \
    template ResistanceMatrix<T> resistance_matrix<T>(const Pseudoinverse<T>&);  \
    template T effective_resistance<T>(const WeightedGraph&, Vertex, Vertex);    \
    template std::string matrix_to_csv<T>(const DenseMatrix<T>&);

RESCURV_INSTANTIATE(Rational)
RESCURV_INSTANTIATE(double)

#undef RESCURV_INSTANTIATE

} // namespace rescurv
