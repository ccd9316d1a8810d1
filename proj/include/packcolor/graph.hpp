#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace packcolor {

using Vertex = int;

/// Shortest-path length; kUnreachable stands for an infinite distance.
using Distance = int;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when a graph would be non-simple or a vertex id is out of range.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted. Every constructor checks simplicity
/// (no loops, no parallel edges), so a Graph value is always well formed.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Builds a graph from an edge list. Edges are undirected; (u,v) and
    /// (v,u) both listed is a parallel edge and is rejected.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    [[nodiscard]] std::size_t order() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return edge_count_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adjacency_[static_cast<std::size_t>(v)];
    }
    [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

    [[nodiscard]] std::size_t max_degree() const noexcept;
    [[nodiscard]] bool is_subcubic() const noexcept { return max_degree() <= 3; }
    [[nodiscard]] bool is_regular(std::size_t d) const noexcept;

    /// Edges with u < v in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] bool contains(Vertex v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size();
    }
    void check_vertex(Vertex v) const {
        if (!contains(v)) {
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                                    std::to_string(adjacency_.size()));
        }
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Connected components as sorted vertex lists, ordered by smallest member.
[[nodiscard]] std::vector<std::vector<Vertex>> connected_components(const Graph& g);
[[nodiscard]] bool is_connected(const Graph& g);

/// Proper 2-coloring (0/1 per vertex) if one exists.
[[nodiscard]] bool is_bipartite(const Graph& g, std::vector<int>* sides = nullptr);

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
[[nodiscard]] Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Applies a relabelling: vertex v of g becomes perm[v].
[[nodiscard]] Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace packcolor
