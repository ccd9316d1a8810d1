#include "packcolor/graph.hpp"

#include <algorithm>
#include <queue>

namespace packcolor {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    for (const Edge& e : edges) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (e.u == e.v) {
            throw GraphError("loop at vertex " + std::to_string(e.u));
        }
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = adjacency_[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw GraphError("parallel edge at vertex " + std::to_string(v));
        }
    }
    edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto nu = neighbors(u);
    check_vertex(v);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& list : adjacency_) {
        best = std::max(best, list.size());
    }
    return best;
}

bool Graph::is_regular(std::size_t d) const noexcept {
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [d](const auto& list) { return list.size() == d; });
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (static_cast<Vertex>(u) < v) {
                out.push_back({static_cast<Vertex>(u), v});
            }
        }
    }
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const auto n = g.order();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        seen[s] = 1;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.order() == 0 || connected_components(g).size() == 1;
}

bool is_bipartite(const Graph& g, std::vector<int>* sides) {
    const auto n = g.order();
    std::vector<int> side(n, -1);
    std::queue<Vertex> q;
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        q.push(static_cast<Vertex>(s));
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw == -1) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    q.push(w);
                } else if (sw == side[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    if (sides) *sides = std::move(side);
    return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> index(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.check_vertex(vertices[i]);
        index[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            Vertex j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) edges.push_back({static_cast<Vertex>(i), j});
        }
    }
    return Graph(vertices.size(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) {
        throw std::invalid_argument("relabel: permutation size does not match graph order");
    }
    auto edges = g.edges();
    for (auto& e : edges) {
        e = {perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]};
    }
    return Graph(g.order(), edges);
}

}  // namespace packcolor
