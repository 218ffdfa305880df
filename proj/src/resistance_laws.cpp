#include "rescurv/resistance_laws.hpp"

#include "rescurv/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

namespace rescurv {

TerminalNetwork::TerminalNetwork(std::size_t n, std::vector<NetworkEdge> edges, Vertex s, Vertex t)
    : n_(n), edges_(std::move(edges)), s_(s), t_(t) {
    if (s >= n || t >= n) throw Error(ErrorCode::IndexOutOfRange, "terminal out of range");
    if (s == t) throw Error(ErrorCode::InvalidArgument, "terminals must differ");
    for (auto& e : edges_) {
        if (e.u >= n || e.v >= n) throw Error(ErrorCode::IndexOutOfRange, "network edge out of range");
        e.r.canonicalize();
        if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "network edge is a self-loop");
        if (e.r <= 0) throw Error(ErrorCode::NonpositiveResistance, "network edge resistance " + to_string(e.r));
    }
}

TerminalNetwork TerminalNetwork::from_graph(const WeightedGraph& g, Vertex s, Vertex t) {
    std::vector<NetworkEdge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.r});
    return TerminalNetwork(g.vertex_count(), std::move(edges), s, t);
}

std::size_t TerminalNetwork::degree(Vertex v) const {
    if (v >= n_) throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
    std::size_t d = 0;
    for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
}

bool TerminalNetwork::terminals_connected() const {
    std::vector<std::vector<Vertex>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{s_};
    seen[s_] = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        if (x == t_) return true;
        for (Vertex y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return false;
}

namespace {

enum class MoveKind { prune, series, parallel };

struct Move {
    MoveKind kind;
    Vertex vertex;          // prune / series
    std::size_t e1, e2;     // parallel: the two edge indices
};

} // namespace

/// Mutable working copy used by all reductions.
class NetworkReducer {
public:
    explicit NetworkReducer(const TerminalNetwork& net) : net_(net) {}

    TerminalNetwork result() const { return net_; }

    std::vector<std::size_t> incident(Vertex v) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < net_.edges_.size(); ++i)
            if (net_.edges_[i].u == v || net_.edges_[i].v == v) out.push_back(i);
        return out;
    }

    static Vertex other(const NetworkEdge& e, Vertex v) { return e.u == v ? e.v : e.u; }

    void erase(std::vector<std::size_t> idx) {
        std::sort(idx.rbegin(), idx.rend());
        for (std::size_t i : idx) net_.edges_.erase(net_.edges_.begin() + static_cast<std::ptrdiff_t>(i));
    }

    void apply_series(Vertex v) {
        auto inc = incident(v);
        const NetworkEdge a = net_.edges_[inc[0]];
        const NetworkEdge b = net_.edges_[inc[1]];
        const Vertex x = other(a, v);
        const Vertex y = other(b, v);
        erase(inc);
        if (x != y) net_.edges_.push_back({x, y, Rational(a.r + b.r)});
    }

    void apply_prune(Vertex v) { erase(incident(v)); }

    void apply_parallel(std::size_t i, std::size_t j) {
        NetworkEdge merged = net_.edges_[i];
        merged.r = 1 / (1 / net_.edges_[i].r + 1 / net_.edges_[j].r);
        erase({i, j});
        net_.edges_.push_back(std::move(merged));
    }

    std::vector<Move> available_moves() const {
        std::vector<Move> moves;
        for (Vertex v = 0; v < net_.n_; ++v) {
            if (net_.is_terminal(v)) continue;
            const std::size_t d = net_.degree(v);
            if (d == 1) moves.push_back({MoveKind::prune, v, 0, 0});
            if (d == 2) moves.push_back({MoveKind::series, v, 0, 0});
        }
        const auto& es = net_.edges_;
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j)
                if (std::minmax(es[i].u, es[i].v) == std::minmax(es[j].u, es[j].v))
                    moves.push_back({MoveKind::parallel, 0, i, j});
        return moves;
    }

    void apply(const Move& m) {
        switch (m.kind) {
        case MoveKind::prune: apply_prune(m.vertex); break;
        case MoveKind::series: apply_series(m.vertex); break;
        case MoveKind::parallel: apply_parallel(m.e1, m.e2); break;
        }
    }

    bool series_pass() {
        bool changed = false;
        for (Vertex v = 0; v < net_.n_; ++v)
            while (!net_.is_terminal(v) && net_.degree(v) == 2) {
                apply_series(v);
                changed = true;
            }
        return changed;
    }

    bool prune_pass() {
        bool changed = false;
        bool again = true;
        while (again) {
            again = false;
            for (Vertex v = 0; v < net_.n_; ++v)
                if (!net_.is_terminal(v) && net_.degree(v) == 1) {
                    apply_prune(v);
                    again = changed = true;
                }
        }
        return changed;
    }

    bool parallel_pass() {
        std::map<std::pair<Vertex, Vertex>, Rational> conductance;
        std::map<std::pair<Vertex, Vertex>, std::size_t> count;
        for (const auto& e : net_.edges_) {
            auto key = std::minmax(e.u, e.v);
            conductance[key] += 1 / e.r;
            ++count[key];
        }
        if (count.size() == net_.edges_.size()) return false;
        std::vector<NetworkEdge> merged;
        merged.reserve(count.size());
        // Keep first-occurrence order so the output is stable.
        std::map<std::pair<Vertex, Vertex>, bool> emitted;
        for (const auto& e : net_.edges_) {
            auto key = std::minmax(e.u, e.v);
            if (emitted[key]) continue;
            emitted[key] = true;
            merged.push_back({e.u, e.v, count[key] == 1 ? e.r : Rational(1 / conductance[key])});
        }
        net_.edges_ = std::move(merged);
        return true;
    }

    void drop_foreign_components() {
        std::vector<std::vector<Vertex>> adj(net_.n_);
        for (const auto& e : net_.edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<char> seen(net_.n_, 0);
        std::vector<Vertex> stack{net_.s_};
        seen[net_.s_] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        std::erase_if(net_.edges_, [&](const NetworkEdge& e) { return !seen[e.u]; });
    }

    std::optional<Rational> terminal_resistance() const {
        const auto& es = net_.edges_;
        if (es.size() == 1 && std::minmax(es[0].u, es[0].v) == std::minmax(net_.s_, net_.t_)) return es[0].r;
        return std::nullopt;
    }

private:
    TerminalNetwork net_;
};

TerminalNetwork series_reduce(const TerminalNetwork& net) {
    NetworkReducer r(net);
    r.series_pass();
    return r.result();
}

TerminalNetwork parallel_reduce(const TerminalNetwork& net) {
    NetworkReducer r(net);
    r.parallel_pass();
    return r.result();
}

TerminalNetwork prune_dead_branches(const TerminalNetwork& net) {
    NetworkReducer r(net);
    r.drop_foreign_components();
    r.prune_pass();
    return r.result();
}

std::optional<Rational> reduce_to_resistance(const TerminalNetwork& net) {
    if (!net.terminals_connected()) throw Error(ErrorCode::DisconnectedTerminals, "no path between the terminals");
    NetworkReducer r(net);
    r.drop_foreign_components();
    bool changed = true;
    while (changed) {
        changed = r.prune_pass();
        changed = r.series_pass() || changed;
        changed = r.parallel_pass() || changed;
    }
    return r.terminal_resistance();
}

std::optional<Rational> reduce_to_resistance_randomized(const TerminalNetwork& net, std::uint64_t seed) {
    if (!net.terminals_connected()) throw Error(ErrorCode::DisconnectedTerminals, "no path between the terminals");
    std::mt19937_64 rng(seed);
    NetworkReducer r(net);
    r.drop_foreign_components();
    for (;;) {
        auto moves = r.available_moves();
        if (moves.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        r.apply(moves[pick(rng)]);
    }
    return r.terminal_resistance();
}

namespace {

struct SpPiece {
    std::size_t vertices;  // local vertices 0..vertices-1; terminals 0 and 1
    std::vector<NetworkEdge> edges;
};

SpPiece random_piece(std::size_t edges, std::mt19937_64& rng) {
    if (edges == 1) {
        std::uniform_int_distribution<int> num(1, 5), den(1, 4);
        return {2, {{0, 1, Rational(num(rng), den(rng))}}};
    }
    std::uniform_int_distribution<std::size_t> split(1, edges - 1);
    const std::size_t left_edges = split(rng);
    SpPiece a = random_piece(left_edges, rng);
    SpPiece b = random_piece(edges - left_edges, rng);
    const bool series = std::bernoulli_distribution(0.5)(rng);

    // Relabel b: its terminal 0 is glued to a's terminal 1 (series) or 0
    // (parallel); its terminal 1 becomes the new sink (series) or a's 1.
    const std::size_t offset = a.vertices;
    auto relabel = [&](Vertex x) -> Vertex {
        if (x == 0) return series ? 1 : 0;
        if (x == 1) return series ? offset : 1;
        return offset + x - (series ? 1 : 2);
    };
    SpPiece out;
    out.vertices = a.vertices + b.vertices - (series ? 1 : 2);
    out.edges = std::move(a.edges);
    for (auto& e : b.edges) out.edges.push_back({relabel(e.u), relabel(e.v), std::move(e.r)});
    if (series) {
        // The new sink is `offset`; swap it with local vertex 1 so the
        // terminals stay at 0 and 1.
        const Vertex old_sink = 1, new_sink = offset;
        for (auto& e : out.edges) {
            for (Vertex* x : {&e.u, &e.v}) {
                if (*x == old_sink)
                    *x = new_sink;
                else if (*x == new_sink)
                    *x = old_sink;
            }
        }
    }
    return out;
}

} // namespace

TerminalNetwork random_series_parallel(std::size_t edges, std::mt19937_64& rng) {
    if (edges < 1) throw Error(ErrorCode::InvalidArgument, "series-parallel network needs at least one edge");
    SpPiece p = random_piece(edges, rng);
    return TerminalNetwork(p.vertices, std::move(p.edges), 0, 1);
}

WeightedGraph to_weighted_graph(const TerminalNetwork& net) {
    std::map<std::pair<Vertex, Vertex>, Rational> conductance;
    std::vector<std::pair<Vertex, Vertex>> order;
    for (const auto& e : net.edges()) {
        auto key = std::minmax(e.u, e.v);
        if (!conductance.count(key)) order.push_back(key);
        conductance[key] += 1 / e.r;
    }
    std::vector<EdgeSpec> specs;
    for (const auto& key : order) specs.push_back({key.first, key.second, Rational(1 / conductance[key])});
    return WeightedGraph(net.vertex_count(), specs);
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// splitmix64 stream; each walk starts from an independent hashed state.
struct WalkRng {
    std::uint64_t state;
    std::uint64_t next() { return mix64(state += kGolden); }
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
};

struct CsrGraph {
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> targets;
};

CsrGraph to_csr(const WeightedGraph& g) {
    CsrGraph c;
    c.offsets.reserve(g.vertex_count() + 1);
    c.offsets.push_back(0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t e : g.incident(v)) c.targets.push_back(static_cast<std::uint32_t>(g.other_end(e, v)));
        c.offsets.push_back(static_cast<std::uint32_t>(c.targets.size()));
    }
    return c;
}

struct WalkSums {
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
};

WalkSums run_walks(const CsrGraph& c, std::uint32_t u, std::uint32_t v, std::uint64_t first, std::uint64_t last,
                   std::uint64_t seed) {
    WalkSums s;
    const std::uint64_t base = mix64(seed);
    for (std::uint64_t w = first; w < last; ++w) {
        WalkRng rng{base ^ mix64(w + kGolden)};
        std::uint64_t steps = 0;
        std::uint32_t x = u;
        for (std::uint32_t target : {v, u}) {
            while (x != target) {
                const std::uint32_t lo = c.offsets[x];
                x = c.targets[lo + rng.below(c.offsets[x + 1] - lo)];
                ++steps;
            }
        }
        s.sum += steps;
        s.sum_sq += static_cast<unsigned __int128>(steps) * steps;
    }
    return s;
}

} // namespace

MonteCarloEstimate mc_effective_resistance(const WeightedGraph& g, Vertex u, Vertex v, std::uint64_t walks,
                                           std::uint64_t seed, unsigned threads) {
    if (u >= g.vertex_count() || v >= g.vertex_count())
        throw Error(ErrorCode::IndexOutOfRange, "vertex pair out of range");
    if (walks < 1) throw Error(ErrorCode::InvalidArgument, "walks must be >= 1");
    if (!g.has_unit_resistances())
        throw Error(ErrorCode::InvalidArgument, "Monte Carlo estimator requires unit resistances");
    if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "random walks need a connected graph");

    MonteCarloEstimate out;
    out.walks = walks;
    if (u == v) return out;

    const CsrGraph c = to_csr(g);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(walks, 256))));
    std::vector<WalkSums> partial(threads);
    const std::uint64_t chunk = (walks + threads - 1) / threads;
    auto job = [&](unsigned t) {
        const std::uint64_t first = std::min<std::uint64_t>(walks, t * chunk);
        const std::uint64_t last = std::min<std::uint64_t>(walks, first + chunk);
        partial[t] = run_walks(c, static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), first, last, seed);
    };
    if (threads == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(job, t);
        for (auto& th : pool) th.join();
    }
    WalkSums total;
    for (const auto& p : partial) {
        total.sum += p.sum;
        total.sum_sq += p.sum_sq;
    }

    const long double n = static_cast<long double>(walks);
    const long double mean = static_cast<long double>(total.sum) / n;
    long double var = 0;
    if (walks > 1) {
        // Integer centering keeps the variance free of cancellation.
        const unsigned __int128 sq_of_sum = total.sum * total.sum;
        const long double centered =
            static_cast<long double>(total.sum_sq) - static_cast<long double>(sq_of_sum) / n;
        var = std::max<long double>(0, centered / (n - 1));
    }
    const long double two_e = 2.0L * static_cast<long double>(g.edge_count());
    out.mean_commute_time = static_cast<double>(mean);
    out.estimate = static_cast<double>(mean / two_e);
    out.standard_error = static_cast<double>(std::sqrt(var / n) / two_e);
    return out;
}

} // namespace rescurv
