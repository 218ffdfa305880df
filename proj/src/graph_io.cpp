#include "rescurv/graph_io.hpp"

#include "rescurv/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace rescurv {

using nlohmann::json;

namespace {

Rational resistance_from_json(const json& r) {
    if (r.is_string()) return parse_rational(r.get<std::string>());
    if (r.is_number_integer() || r.is_number_unsigned()) return Rational(r.dump());
    if (r.is_number_float()) return parse_rational(r.dump());
    throw Error(ErrorCode::ParseError, "edge resistance must be a number or a rational string");
}

std::size_t index_from_json(const json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("edge missing '") + key + "'");
    const json& x = j.at(key);
    if (!x.is_number_integer() || x.get<long long>() < 0)
        throw Error(ErrorCode::ParseError, std::string("'") + key + "' must be a non-negative integer");
    return x.get<std::size_t>();
}

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

} // namespace

WeightedGraph graph_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw Error(ErrorCode::ParseError, "graph JSON needs an integer 'n'");
    long long n = doc["n"].get<long long>();
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "graph needs at least one vertex");
    std::vector<EdgeSpec> specs;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw Error(ErrorCode::ParseError, "'edges' must be an array");
        for (const json& e : doc["edges"]) {
            if (!e.is_object()) throw Error(ErrorCode::ParseError, "edge entries must be objects");
            EdgeSpec s{index_from_json(e, "u"), index_from_json(e, "v"), std::nullopt};
            if (e.contains("r")) s.r = resistance_from_json(e["r"]);
            specs.push_back(std::move(s));
        }
    }
    return WeightedGraph(static_cast<std::size_t>(n), specs);
}

std::string graph_to_json(const WeightedGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) {
        json je = {{"u", e.u}, {"v", e.v}};
        if (e.r != 1) je["r"] = to_string(e.r);
        edges.push_back(std::move(je));
    }
    json doc = {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
    return doc.dump();
}

WeightedGraph graph_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<EdgeSpec> specs;
    std::size_t max_index = 0;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(trim(f));
        if (first && !fields.empty() && fields[0] == "u") {
            first = false;
            continue;
        }
        first = false;
        if (fields.size() < 2 || fields.size() > 3)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected u,v[,r]");
        EdgeSpec s{};
        try {
            std::size_t pos = 0;
            long long u = std::stoll(fields[0], &pos);
            if (pos != fields[0].size() || u < 0) throw std::invalid_argument("u");
            long long v = std::stoll(fields[1], &pos);
            if (pos != fields[1].size() || v < 0) throw std::invalid_argument("v");
            s.u = static_cast<Vertex>(u);
            s.v = static_cast<Vertex>(v);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad vertex index");
        }
        if (fields.size() == 3) s.r = parse_rational(fields[2]);
        max_index = std::max({max_index, s.u, s.v});
        specs.push_back(std::move(s));
    }
    if (specs.empty()) throw Error(ErrorCode::ParseError, "CSV edge list is empty");
    return WeightedGraph(max_index + 1, specs);
}

std::string graph_to_csv(const WeightedGraph& g) {
    std::string out = "u,v,r\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + "," + std::to_string(e.v) + "," + to_string(e.r) + "\n";
    return out;
}

WeightedGraph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return is_json ? graph_from_json(buf.str()) : graph_from_csv(buf.str());
}

} // namespace rescurv
