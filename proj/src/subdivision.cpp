#include "packcolor/subdivision.hpp"

#include <algorithm>
#include <stdexcept>

namespace packcolor {

namespace {

Graph build_subdivided(const Graph& g, const std::vector<Edge>& edges) {
    const auto n = static_cast<Vertex>(g.order());
    std::vector<Edge> out;
    out.reserve(2 * edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Vertex mid = n + static_cast<Vertex>(i);
        out.push_back({edges[i].u, mid});
        out.push_back({edges[i].v, mid});
    }
    return Graph(g.order() + edges.size(), out);
}

}  // namespace

SubdivisionMap::SubdivisionMap(Graph original)
    : original_(std::move(original)), edges_(original_.edges()) {
    subdivided_ = build_subdivided(original_, edges_);
}

Vertex SubdivisionMap::image(Vertex v) const {
    original_.check_vertex(v);
    return v;
}

Vertex SubdivisionMap::midpoint(Vertex u, Vertex v) const {
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) {
        throw std::invalid_argument("midpoint: (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not an edge");
    }
    return static_cast<Vertex>(original_.order()) + static_cast<Vertex>(it - edges_.begin());
}

bool SubdivisionMap::is_midpoint(Vertex s) const {
    subdivided_.check_vertex(s);
    return static_cast<std::size_t>(s) >= original_.order();
}

std::optional<Edge> SubdivisionMap::edge_of(Vertex s) const {
    if (!is_midpoint(s)) return std::nullopt;
    return edges_[static_cast<std::size_t>(s) - original_.order()];
}

SubdivisionMap subdivide(const Graph& g) { return SubdivisionMap(g); }

}  // namespace packcolor
