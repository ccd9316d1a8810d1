#pragma once

#include <optional>
#include <vector>

#include "packcolor/graph.hpp"

namespace packcolor {

/// The 1-subdivision S(G) of a graph together with the vertex
/// correspondence. Original vertex v keeps id v in S(G); the midpoint of the
/// i-th edge of G (edges in sorted order) gets id n + i.
class SubdivisionMap {
public:
    explicit SubdivisionMap(Graph original);

    [[nodiscard]] const Graph& original() const noexcept { return original_; }
    [[nodiscard]] const Graph& subdivided() const noexcept { return subdivided_; }

    [[nodiscard]] Vertex image(Vertex v) const;
    [[nodiscard]] Vertex midpoint(Vertex u, Vertex v) const;
    [[nodiscard]] bool is_midpoint(Vertex s) const;

    /// For a midpoint vertex of S(G), the original edge it subdivides.
    [[nodiscard]] std::optional<Edge> edge_of(Vertex s) const;

    [[nodiscard]] const std::vector<Edge>& original_edges() const noexcept { return edges_; }

private:
    Graph original_;
    Graph subdivided_;
    std::vector<Edge> edges_;
};

[[nodiscard]] SubdivisionMap subdivide(const Graph& g);

}  // namespace packcolor
