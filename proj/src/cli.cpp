#include "rescurv/cli.hpp"

#include "rescurv/bounds.hpp"
#include "rescurv/curvature.hpp"
#include "rescurv/error.hpp"
#include "rescurv/generators.hpp"
#include "rescurv/graph_io.hpp"
#include "rescurv/grids_ladders.hpp"
#include "rescurv/products.hpp"
#include "rescurv/resistance_laws.hpp"
#include "rescurv/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rescurv::cli {

using nlohmann::ordered_json;

namespace {

struct Options {
    std::string backend = "exact";
    std::string format;
    std::string out_path;
    std::size_t max_exact_n = kDefaultMaxExactN;
    std::uint64_t walks = 1'000'000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct GraphInput {
    WeightedGraph graph;
    std::optional<ProductDescriptor> product;
};

GraphInput load_graph(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) return {read_graph_file(spec), std::nullopt};
    if (looks_like_shorthand(spec)) {
        ProductDescriptor pd = parse_shorthand(spec);
        WeightedGraph g = pd.graph();
        return {std::move(g), std::move(pd)};
    }
    throw Error(ErrorCode::InvalidArgument, "'" + spec + "' is neither a file nor generator shorthand");
}

Backend backend_for(const Options& o, std::size_t n) {
    Backend b = parse_backend(o.backend);
    if (b == Backend::exact && n > o.max_exact_n)
        throw Error(ErrorCode::SizeLimitExceeded, "graph has " + std::to_string(n) +
                                                      " vertices, above the exact limit " +
                                                      std::to_string(o.max_exact_n) + "; use --backend float");
    return b;
}

std::string require_format(const Options& o, std::initializer_list<const char*> allowed) {
    std::string f = o.format.empty() ? *allowed.begin() : o.format;
    for (const char* a : allowed)
        if (f == a) return f;
    throw Error(ErrorCode::InvalidArgument, "format '" + f + "' not supported by this command");
}

template <class T>
ordered_json jvalue(const T& x) {
    if constexpr (std::is_same_v<T, Rational>)
        return to_string(x);
    else
        return x;
}

// ---- curvature -----------------------------------------------------------

template <class T>
std::string curvature_output(const WeightedGraph& g, const std::string& format) {
    CurvatureVector<T> p = node_curvatures<T>(g);
    if (format == "csv") return curvatures_to_csv(p);
    if (format == "dot") return curvatures_to_dot(g, p);
    return curvatures_to_json(p) + "\n";
}

std::string cmd_curvature(const Options& o, const std::string& input) {
    GraphInput gi = load_graph(input);
    const std::string format = require_format(o, {"json", "csv", "dot"});
    if (backend_for(o, gi.graph.vertex_count()) == Backend::exact) return curvature_output<Rational>(gi.graph, format);
    return curvature_output<double>(gi.graph, format);
}

// ---- resistance ----------------------------------------------------------

template <class T>
std::string resistance_output(const WeightedGraph& g, const std::vector<std::size_t>& pair, const std::string& format) {
    if (pair.size() == 2) {
        T w = effective_resistance<T>(g, pair[0], pair[1]);
        if (format == "csv") return "u,v,resistance\n" + std::to_string(pair[0]) + "," + std::to_string(pair[1]) + "," + to_string(w) + "\n";
        ordered_json j = {{"u", pair[0]}, {"v", pair[1]}, {"resistance", jvalue(w)}};
        return j.dump() + "\n";
    }
    ResistanceMatrix<T> om = resistance_matrix<T>(g);
    if (format == "csv") return matrix_to_csv(om.matrix);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < om.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < om.size(); ++j) row.push_back(jvalue(om(i, j)));
        rows.push_back(std::move(row));
    }
    return ordered_json{{"n", om.size()}, {"resistance", std::move(rows)}}.dump() + "\n";
}

std::string cmd_resistance(const Options& o, const std::string& input, const std::vector<std::size_t>& pair) {
    GraphInput gi = load_graph(input);
    const std::string format = require_format(o, {"json", "csv"});
    if (backend_for(o, gi.graph.vertex_count()) == Backend::exact) return resistance_output<Rational>(gi.graph, pair, format);
    return resistance_output<double>(gi.graph, pair, format);
}

// ---- product -------------------------------------------------------------

template <class T>
std::string product_output(const std::string& shorthand, const ProductDescriptor& pd, const std::string& report,
                           const std::string& format) {
    CurvatureVector<T> p = product_node_curvatures<T>(pd);
    if (format == "csv") return curvatures_to_csv(p);
    if (format == "dot") return curvatures_to_dot(pd.graph(), p);

    ordered_json j;
    j["product"] = shorthand;
    j["n"] = pd.total_n();
    j["backend"] = std::is_same_v<T, Rational> ? "exact" : "float";
    if (report == "curvatures") {
        j["curvatures"] = ordered_json::parse(curvatures_to_json(p));
        return j.dump() + "\n";
    }
    const double eps = std::is_same_v<T, Rational> ? 0.0 : kDefaultSignEpsilon;
    std::vector<Sign> signs = sign_classify(p, eps);
    std::optional<std::vector<Position>> where;
    bool all_paths = std::all_of(pd.factors().begin(), pd.factors().end(), [](const WeightedGraph& f) { return is_path(f); });
    if (all_paths) where = classify_boundary_interior(pd);

    ordered_json counts = {{"negative", 0}, {"zero", 0}, {"positive", 0}};
    ordered_json negative = ordered_json::array();
    ordered_json negative_boundary = ordered_json::array();
    for (std::size_t i = 0; i < signs.size(); ++i) {
        counts[std::string(to_string(signs[i]))] = counts[std::string(to_string(signs[i]))].get<int>() + 1;
        if (signs[i] == Sign::negative) {
            negative.push_back(i);
            if (where && (*where)[i] == Position::boundary) negative_boundary.push_back(i);
        }
    }
    j["signs"] = counts;
    j["graph_curvature"] = jvalue(graph_curvature(p));
    j["negative_vertices"] = negative;
    if (where) {
        std::size_t interior = static_cast<std::size_t>(std::count(where->begin(), where->end(), Position::interior));
        j["interior_count"] = interior;
        j["negative_boundary_vertices"] = negative_boundary;
    }
    j["curvatures"] = ordered_json::parse(curvatures_to_json(p));
    return j.dump() + "\n";
}

std::string cmd_product(const Options& o, const std::string& shorthand, const std::string& report) {
    if (report != "signs" && report != "curvatures")
        throw Error(ErrorCode::InvalidArgument, "--report must be 'signs' or 'curvatures'");
    ProductDescriptor pd = parse_shorthand(shorthand);
    const std::string format = require_format(o, {"json", "csv", "dot"});
    if (backend_for(o, pd.total_n()) == Backend::exact) return product_output<Rational>(shorthand, pd, report, format);
    return product_output<double>(shorthand, pd, report, format);
}

// ---- grid-verify ---------------------------------------------------------

std::string cmd_grid_verify(const Options& o, std::size_t m, std::size_t n, bool& failed) {
    const std::string format = require_format(o, {"json", "csv"});
    Backend b = backend_for(o, m * n);
    GridTheoremReport r = verify_grid_theorem(m, n, b, std::max<std::size_t>(kDefaultMaxExactGridSide, static_cast<std::size_t>(std::sqrt(o.max_exact_n))));
    failed = !r.holds();
    if (format == "csv") {
        return "m,n,interior_all_negative,boundary_all_nonnegative,boundary_min,boundary_bound_holds\n" +
               std::to_string(m) + "," + std::to_string(n) + "," + (r.interior_all_negative ? "true" : "false") + "," +
               (r.boundary_all_nonnegative ? "true" : "false") + "," + to_string(r.boundary_min) + "," +
               (r.boundary_bound_holds ? "true" : "false") + "\n";
    }
    ordered_json j;
    j["m"] = m;
    j["n"] = n;
    j["interior_all_negative"] = r.interior_all_negative;
    j["boundary_all_nonnegative"] = r.boundary_all_nonnegative;
    j["boundary_min"] = to_string(r.boundary_min);
    j["boundary_min_float"] = to_double(r.boundary_min);
    j["boundary_argmin"] = r.boundary_argmin;
    j["interior_max"] = to_string(r.interior_max);
    j["bound"] = to_string(kGridBoundaryBound);
    j["boundary_bound_holds"] = r.boundary_bound_holds;
    j["holds"] = r.holds();
    return j.dump() + "\n";
}

// ---- ladder --------------------------------------------------------------

std::string cmd_ladder(const Options& o, std::size_t n) {
    const std::string format = require_format(o, {"csv", "json"});
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "ladder length must be >= 1");
    LadderResistanceTable t = ladder_alpha(n);
    CurvatureVector<Rational> p = ladder_curvatures(n);
    if (format == "json") {
        ordered_json j;
        j["n"] = n;
        ordered_json alpha = ordered_json::array(), rungs = ordered_json::array(), rails = ordered_json::array(),
                     curv = ordered_json::array();
        for (std::size_t k = 1; k <= n; ++k) {
            alpha.push_back(to_string(t.alpha(k)));
            rungs.push_back(to_string(rung_resistance(n, k)));
            if (k < n) rails.push_back(to_string(rail_resistance(n, k)));
            curv.push_back(to_string(p[ladder_vertex(0, k, n)]));
        }
        j["alpha"] = alpha;
        j["rung_resistance"] = rungs;
        j["rail_resistance"] = rails;
        j["curvature"] = curv;
        return j.dump() + "\n";
    }
    std::string out = "k,alpha,rung_resistance,rail_resistance,curvature\n";
    for (std::size_t k = 1; k <= n; ++k)
        out += std::to_string(k) + "," + to_string(t.alpha(k)) + "," + to_string(rung_resistance(n, k)) + "," +
               (k < n ? to_string(rail_resistance(n, k)) : std::string()) + "," +
               to_string(p[ladder_vertex(0, k, n)]) + "\n";
    return out;
}

// ---- bounds-check --------------------------------------------------------

std::string cmd_bounds(const Options& o, const std::string& a, const std::string& b, bool& failed) {
    require_format(o, {"csv"});
    GraphInput g1 = load_graph(a);
    GraphInput g2 = load_graph(b);
    auto check = [&](const auto& rows) {
        failed = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.lb_holds || !r.ub_holds; });
        return bounds_to_csv(rows);
    };
    if (backend_for(o, g1.graph.vertex_count() * g2.graph.vertex_count()) == Backend::exact)
        return check(validate_bounds<Rational>(g1.graph, g2.graph));
    return check(validate_bounds<double>(g1.graph, g2.graph));
}

// ---- mc-check ------------------------------------------------------------

std::string cmd_mc(const Options& o, const std::string& input, std::size_t u, std::size_t v) {
    require_format(o, {"json"});
    GraphInput gi = load_graph(input);
    MonteCarloEstimate est = mc_effective_resistance(gi.graph, u, v, o.walks, o.seed, o.threads);
    Backend b = parse_backend(o.backend);
    if (gi.graph.vertex_count() > o.max_exact_n) b = Backend::floating;
    ordered_json j;
    j["u"] = u;
    j["v"] = v;
    j["walks"] = o.walks;
    j["seed"] = o.seed;
    j["estimate"] = est.estimate;
    j["stderr"] = est.standard_error;
    double exact;
    if (b == Backend::exact) {
        Rational w = effective_resistance<Rational>(gi.graph, u, v);
        j["exact"] = to_string(w);
        exact = to_double(w);
    } else {
        exact = effective_resistance<double>(gi.graph, u, v);
        j["exact"] = exact;
    }
    j["exact_float"] = exact;
    if (est.standard_error > 0)
        j["z"] = (est.estimate - exact) / est.standard_error;
    else
        j["z"] = est.estimate == exact ? 0.0 : std::numeric_limits<double>::infinity();
    return j.dump() + "\n";
}

// ---- sweep ---------------------------------------------------------------

std::string cmd_sweep(const Options& o, const std::string& table, std::size_t n_max) {
    require_format(o, {"csv"});
    std::string out;
    if (table == "alpha" || table == "corner") {
        if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "--n-max must be >= 1");
        LadderResistanceTable t = ladder_alpha(n_max);
        out = table == "alpha" ? "n,alpha,alpha_float\n" : "n,corner_curvature,corner_curvature_float\n";
        for (std::size_t n = 1; n <= n_max; ++n) {
            Rational v = table == "alpha" ? t.alpha(n) : Rational(n == 1 ? Rational(1, 2) : Rational(1 - t.alpha(n)));
            out += std::to_string(n) + "," + to_string(v) + "," + to_string(to_double(v)) + "\n";
        }
        return out;
    }
    if (table == "grid-min") {
        out = "m,n,boundary_min,boundary_min_float,interior_all_negative,boundary_all_nonnegative\n";
        for (std::size_t m = 3; m <= n_max; ++m)
            for (std::size_t n = 3; n <= n_max; ++n) {
                GridTheoremReport r = verify_grid_theorem(m, n, parse_backend(o.backend), std::max(n_max, kDefaultMaxExactGridSide));
                out += std::to_string(m) + "," + std::to_string(n) + "," + to_string(r.boundary_min) + "," +
                       to_string(to_double(r.boundary_min)) + "," + (r.interior_all_negative ? "true" : "false") +
                       "," + (r.boundary_all_nonnegative ? "true" : "false") + "\n";
            }
        return out;
    }
    if (table == "central-edge") {
        Backend b = parse_backend(o.backend);
        if (b == Backend::exact && n_max * n_max > o.max_exact_n) b = Backend::floating;
        out = "n,u,v,resistance\n";
        for (const auto& row : central_edge_resistance_sweep(n_max, b))
            out += std::to_string(row.n) + "," + std::to_string(row.u) + "," + std::to_string(row.v) + "," +
                   to_string(row.resistance) + "\n";
        return out;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown sweep table '" + table + "' (alpha, corner, grid-min, central-edge)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Effective resistance and node resistance curvature on weighted graphs", "rescurv"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--backend", o.backend, "exact | float")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--format", o.format, "json | csv | dot");
        sub->add_option("--out", o.out_path, "write output here instead of stdout");
        sub->add_option("--max-exact-n", o.max_exact_n, "largest vertex count accepted by the exact backend");
    };

    std::string input, input2, report = "signs", table;
    std::vector<std::size_t> pair;
    std::size_t m = 0, n = 0, u = 0, v = 0, n_max = 15;

    auto* curvature = app.add_subcommand("curvature", "node resistance curvature of a graph");
    curvature->add_option("graph", input, "graph file (.json/.csv) or shorthand such as P4, C5, P3xP4")->required();
    add_common(curvature);

    auto* resistance = app.add_subcommand("resistance", "effective resistance matrix or a single pair");
    resistance->add_option("graph", input)->required();
    resistance->add_option("--pair", pair, "u v")->expected(2);
    add_common(resistance);

    auto* product = app.add_subcommand("product", "curvature of a Cartesian product given as shorthand");
    product->add_option("shorthand", input, "e.g. P3^3, C5xP2")->required();
    product->add_option("--report", report, "signs | curvatures");
    add_common(product);

    auto* gridv = app.add_subcommand("grid-verify", "check the grid curvature sign pattern exactly");
    gridv->add_option("m", m)->required();
    gridv->add_option("n", n)->required();
    add_common(gridv);

    auto* ladder = app.add_subcommand("ladder", "closed-form ladder resistances and curvatures");
    ladder->add_option("n", n)->required();
    add_common(ladder);

    auto* bounds = app.add_subcommand("bounds-check", "per-edge lower/upper bound check on G1 x G2");
    bounds->add_option("--g1", input, "first factor (file or shorthand)")->required();
    bounds->add_option("--g2", input2, "second factor (file or shorthand)")->required();
    add_common(bounds);

    auto* mc = app.add_subcommand("mc-check", "Monte Carlo commute-time estimate against the exact value");
    mc->add_option("graph", input)->required();
    mc->add_option("u", u)->required();
    mc->add_option("v", v)->required();
    mc->add_option("--walks", o.walks, "number of commute walks");
    mc->add_option("--seed", o.seed, "master seed");
    mc->add_option("--threads", o.threads, "worker threads (result is independent of this)");
    add_common(mc);

    auto* sweep = app.add_subcommand("sweep", "CSV tables: alpha, corner, grid-min, central-edge");
    sweep->add_option("table", table)->required();
    sweep->add_option("--n-max", n_max, "largest n in the table");
    add_common(sweep);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o_out, o_err;
        int code = app.exit(e, o_out, o_err);
        out << o_out.str();
        err << o_err.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string result;
    bool failed = false;
    try {
        if (*curvature) result = cmd_curvature(o, input);
        else if (*resistance) result = cmd_resistance(o, input, pair);
        else if (*product) result = cmd_product(o, input, report);
        else if (*gridv) result = cmd_grid_verify(o, m, n, failed);
        else if (*ladder) result = cmd_ladder(o, n);
        else if (*bounds) result = cmd_bounds(o, input, input2, failed);
        else if (*mc) result = cmd_mc(o, input, u, v);
        else if (*sweep) result = cmd_sweep(o, table, n_max);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) {
            err << "error: cannot write '" << o.out_path << "'\n";
            return kExitUsage;
        }
        f << result;
    } else {
        out << result;
    }
    if (failed) {
        err << "verification failed\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

} // namespace rescurv::cli
