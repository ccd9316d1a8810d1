#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "packcolor/graph.hpp"

namespace packcolor {

/// Connected 3-regular simple graph on n vertices from the pairing model.
/// Rejected outcomes (loops, multi-edges, disconnected) are redrawn from the
/// same stream, so (n, seed) fixes the result.
[[nodiscard]] Graph generate_random_cubic(std::size_t n, std::uint64_t seed);

/// petersen, k1..k4, k33, prism(k), cycle(k), path(k). The parameterised
/// forms also accept "prism5" / "prism:5".
[[nodiscard]] Graph named_graph(std::string_view name);

[[nodiscard]] Graph petersen_graph();
[[nodiscard]] Graph cycle_graph(std::size_t k);
[[nodiscard]] Graph path_graph(std::size_t k);
[[nodiscard]] Graph complete_graph(std::size_t k);
[[nodiscard]] Graph prism_graph(std::size_t k);

/// Recognises the Petersen graph as the unique 3-regular graph of order 10
/// and girth 5.
[[nodiscard]] bool is_petersen(const Graph& g);

/// graph6 string of the relabelling whose upper-triangle adjacency bits are
/// lexicographically smallest. Exact over all n! labellings (the search
/// prunes prefixes that already compare greater); intended for n <= 10.
[[nodiscard]] std::string canonical_form(const Graph& g);

inline constexpr std::size_t kDefaultEnumerationCap = 8;

/// One representative per isomorphism class of connected graphs with
/// maximum degree <= 3 and 1 <= n <= n_max, ordered by (n, canonical form).
/// Graphs are grown one edge at a time from the empty graph with degree
/// pruning, deduplicated by canonical form.
void for_each_connected_subcubic(std::size_t n_max, const std::function<void(const Graph&)>& visit,
                                 std::size_t cap = kDefaultEnumerationCap);
[[nodiscard]] std::vector<Graph> enumerate_connected_subcubic(std::size_t n_max,
                                                              std::size_t cap = kDefaultEnumerationCap);

}  // namespace packcolor
