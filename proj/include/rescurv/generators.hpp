#pragma once

#include "rescurv/graph.hpp"
#include "rescurv/products.hpp"

#include <string_view>

namespace rescurv {

/// P_n, vertices 0..n-1 in order. n >= 1.
WeightedGraph path(std::size_t n);
/// C_n, n >= 3.
WeightedGraph cycle(std::size_t n);
/// K_n, n >= 1.
WeightedGraph complete(std::size_t n);
/// K_{1,leaves}; vertex 0 is the center.
WeightedGraph star(std::size_t leaves);
/// Q_d = K_2^d, d >= 1.
WeightedGraph hypercube(std::size_t d);

/// Generator shorthand:
///   factor  := ('P' | 'C' | 'K') <n> | 'Q' <d>
///   term    := factor ['^' <k>]
///   product := term ('x' term)*
/// e.g. "P3xP4", "P3^3", "C5xP2", "Q3". Powers and Q<d> expand into
/// repeated factors (Q<d> becomes d copies of P2).
ProductDescriptor parse_shorthand(std::string_view text);

/// Heuristic used by the CLI: true when `text` parses as shorthand.
bool looks_like_shorthand(std::string_view text);

} // namespace rescurv
