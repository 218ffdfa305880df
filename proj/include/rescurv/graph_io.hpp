#pragma once

#include "rescurv/graph.hpp"

#include <string>
#include <string_view>

namespace rescurv {

// JSON: {"n": <int>, "edges": [{"u": <int>, "v": <int>, "r": <number|"p/q">}]}
// "r" defaults to 1. Numeric "r" values are read through their decimal text,
// so 0.1 means exactly 1/10.
WeightedGraph graph_from_json(std::string_view text);
std::string graph_to_json(const WeightedGraph& g);

// CSV: one "u,v[,r]" line per edge; blank lines and lines starting with '#'
// are skipped, as is a leading "u,v[,r]" header. n = max index + 1.
WeightedGraph graph_from_csv(std::string_view text);
std::string graph_to_csv(const WeightedGraph& g);

/// Dispatches on extension (.json or anything else as CSV).
WeightedGraph read_graph_file(const std::string& path);

} // namespace rescurv
