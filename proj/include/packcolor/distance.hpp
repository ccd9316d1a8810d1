#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "packcolor/graph.hpp"

namespace packcolor {

/// BFS distance between two vertices; kUnreachable across components.
[[nodiscard]] Distance distance(const Graph& g, Vertex u, Vertex v);

/// Distances from `source` to every vertex.
[[nodiscard]] std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Vertices at distance 1..radius from `source`, in BFS order (source excluded).
[[nodiscard]] std::vector<Vertex> ball(const Graph& g, Vertex source, int radius);

/// Minimum distance between two vertex sets.
[[nodiscard]] Distance set_distance(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

/// Length of a shortest cycle, kUnreachable for forests.
[[nodiscard]] Distance girth(const Graph& g);

/// Distance queries against one graph. For orders up to `table_cap` the
/// full table is computed on construction; above that every query runs a
/// BFS bounded by the distance it needs to certify.
class DistanceOracle {
public:
    static constexpr std::size_t kDefaultTableCap = 512;

    explicit DistanceOracle(const Graph& g, std::size_t table_cap = kDefaultTableCap);

    [[nodiscard]] const Graph& graph() const noexcept { return *graph_; }
    [[nodiscard]] bool has_table() const noexcept { return !table_.empty(); }

    [[nodiscard]] Distance operator()(Vertex u, Vertex v) const;

    /// True iff d(u,v) <= radius. Uses at most a radius-bounded BFS.
    [[nodiscard]] bool within(Vertex u, Vertex v, int radius) const;

private:
    const Graph* graph_;
    std::size_t n_;
    std::vector<Distance> table_;
};

}  // namespace packcolor
